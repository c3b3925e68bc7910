"""Connectivity under a batch of failures in general planar graphs.

Two layers share one pattern.  Inside a biconnected block the SPQR tree is
coloured: blue nodes are those whose poles may have been separated, and each
coloured node gets a small oracle over its model graph (a triconnected oracle
for R, a cycle index for S, an edge counter for P).  A query climbs from a
vertex to the most ancestral pole it still reaches, skipping runs of
uncoloured nodes with a marked-ancestor index and finishing with a table
filled top-down at update time.  The block-cut tree repeats the same climb
with blocks in place of tree nodes.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Sequence

from .brute import split_failures
from .decomp import build_block_cut, build_spqr
from .errors import FailedEndpoint, UnknownElement, UnknownVertex
from .order_tools import MarkedAncestorIndex
from .planar_core import RotationGraph, embed_simple
from .tri_oracle import TriOracle


class _RigidModel:
    """Triconnected model graph with a failure oracle over it."""

    def __init__(self, model) -> None:
        verts = sorted({z for _, a, b in model for z in (a, b)})
        self.vid = {v: i for i, v in enumerate(verts)}
        self.eid = {lab: i for i, (lab, _, _) in enumerate(model)}
        g = embed_simple(len(verts), [(self.vid[a], self.vid[b]) for _, a, b in model])
        self.oracle = TriOracle(g)

    def update(self, vertices: Iterable[int], labels: Iterable[int]) -> int:
        vs = [self.vid[v] for v in vertices]
        es = [self.eid[lab] for lab in labels]
        self.oracle.update(vertices=vs, edges=es)
        return len(vs) + len(es)

    def connected(self, a: int, b: int) -> bool:
        return self.oracle.connected(self.vid[a], self.vid[b])


class _SeriesModel:
    """Cycle model; connectivity is a check for broken items on either arc."""

    def __init__(self, model) -> None:
        adj: dict[int, list[tuple[int, int]]] = {}
        for lab, a, b in model:
            adj.setdefault(a, []).append((b, lab))
            adj.setdefault(b, []).append((a, lab))
        start = model[0][1]
        order, labels = [start], []
        prev_lab = None
        v = start
        while True:
            w, lab = next((w, lab) for w, lab in adj[v] if lab != prev_lab)
            labels.append(lab)
            if w == start:
                break
            order.append(w)
            v, prev_lab = w, lab
        # vertex i sits at 2i, the edge from vertex i to i+1 at 2i+1
        self.vpos = {v: 2 * i for i, v in enumerate(order)}
        self.epos = {lab: 2 * i + 1 for i, lab in enumerate(labels)}
        self.span = 2 * len(order)
        self.broken: list[int] = []

    def update(self, vertices: Iterable[int], labels: Iterable[int]) -> int:
        b = [self.vpos[v] for v in vertices] + [self.epos[lab] for lab in labels]
        self.broken = sorted(b)
        return len(b)

    def connected(self, a: int, b: int) -> bool:
        if a == b:
            return True
        x, y = sorted((self.vpos[a], self.vpos[b]))
        inside = bisect_left(self.broken, y) - bisect_left(self.broken, x + 1)
        return inside == 0 or inside == len(self.broken)


class _ParallelModel:
    def __init__(self, model) -> None:
        self.labels = [lab for lab, _, _ in model]
        self.alive = 0
        self.poles_ok = True

    def update(self, vertices: Iterable[int], labels: Iterable[int]) -> int:
        vs = list(vertices)
        dead = set(labels)
        self.poles_ok = not vs
        self.alive = sum(1 for lab in self.labels if lab not in dead)
        return len(vs) + len(dead)

    def connected(self, a: int, b: int) -> bool:
        return a == b or (self.poles_ok and self.alive > 0)


_MODELS = {"R": _RigidModel, "S": _SeriesModel, "P": _ParallelModel}


class BlockOracle:
    """Failure oracle for a biconnected multigraph on ``0 .. n-1``.

    Edges are ``(a, b)`` pairs and are failed by index.  Blocks with fewer
    than three edges are handled without a decomposition.
    """

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]) -> None:
        self.n = n
        self.edges = list(edges)
        self.tree = None
        self.fv: frozenset[int] = frozenset()
        self.fe: frozenset[int] = frozenset()
        self.stats: dict[str, int] = {}
        if len(self.edges) < 3:
            return
        t = build_spqr(n, self.edges)
        self.tree = t
        self.owner = {}
        for u, nd in enumerate(t.nodes):
            for lab, _, _ in nd.model:
                if t.is_real(lab):
                    self.owner[lab] = u
        self.models = [_MODELS[nd.kind](nd.model) for nd in t.nodes]
        self._reset_colors()

    def _reset_colors(self) -> None:
        self.colored: set[int] = set()
        self.purple: set[int] = set()
        self.reach: dict[int, tuple[int | None, int]] = {}
        self.marks = None

    # -- update --------------------------------------------------------------
    def update(self, vertices: Iterable[int] = (), edges: Iterable[int] = ()) -> None:
        self.fv = frozenset(vertices)
        self.fe = frozenset(edges)
        if self.tree is None:
            return
        t = self.tree
        nodes, root = t.nodes, t.root
        fv, fe = self.fv, self.fe
        self._reset_colors()
        d = len(fv) + len(fe)

        # blue: owners of failures, S-nodes over a blue child, R/P over two
        blue: set[int] = set()
        blue_children: dict[int, int] = {}
        seeds = [t.phi[z] for z in fv] + [self.owner[e] for e in fe]
        for s in seeds:
            x = s
            while x not in blue:
                blue.add(x)
                p = nodes[x].parent
                if p < 0:
                    break
                blue_children[p] = blue_children.get(p, 0) + 1
                if p in blue or not (nodes[p].kind == "S" or blue_children[p] >= 2):
                    break
                x = p
        # an R-node with both poles dead and a blue child would otherwise be
        # left uncoloured with a possibly split model graph
        sealed = {p for p in blue_children
                  if p not in blue and p != root and nodes[p].kind == "R" and set(nodes[p].poles) <= fv}
        colored = blue | sealed
        assert len(blue) < 4 * max(d, 1), "too many blue nodes"
        self.colored = colored

        # purple, bottom-up; each coloured node gets its oracle on the way
        pre = t.tree.pre
        order = sorted(colored, key=pre.__getitem__)
        injected = 0
        for u in reversed(order):
            nd = nodes[u]
            mv = nd.vertices()
            dead = [lab for lab, _, _ in nd.model if lab in fe]
            if u != root:
                dead.append(nd.polar[0])
            dead.extend(nodes[c].polar[0] for c in nd.children if c in self.purple)
            injected += self.models[u].update([z for z in mv if z in fv], set(dead))
            if u != root:
                p0, p1 = nd.poles
                if p0 in fv or p1 in fv or not self.models[u].connected(p0, p1):
                    self.purple.add(u)
        assert injected <= 8 * max(d, 1) + 4 * len(colored), "too many injected failures"

        self.marks = MarkedAncestorIndex(t.tree, colored)
        # farthest reachable pole for every live pole of a coloured node, top-down
        for u in order:
            if u == root:
                continue
            for p in sorted(nodes[u].poles):
                if p not in fv and p not in self.reach:
                    w = t.phi[p]
                    self.reach[p] = self._local(p, w) if w in colored else self._climb(p, w)
        self.stats = {"failures": d, "blue": len(blue), "sealed": len(sealed),
                      "colored": len(colored), "purple": len(self.purple), "injected": injected}

    # -- climbing ------------------------------------------------------------
    def _local(self, z: int, u: int) -> tuple[int | None, int]:
        """Resolve ``z`` inside coloured node ``u``."""
        if u == self.tree.root:
            return z, u
        model = self.models[u]
        for p in sorted(self.tree.nodes[u].poles):
            if p not in self.fv and model.connected(z, p):
                return self.reach[p]
        return z, u

    def _climb(self, z: int, u: int) -> tuple[int | None, int]:
        """Resolve ``z`` whose node ``u`` is uncoloured.

        Returns ``(None, node)`` when the climb ends at an uncoloured node;
        every vertex ending there is connected to every other.
        """
        t = self.tree
        nodes, fv = t.nodes, self.fv
        tree = t.tree
        if u == t.root:
            return None, u
        poles = set(nodes[u].poles)
        if poles <= fv:
            return None, u
        w = self.marks.nearest_marked_ancestor(tree.parent[u])
        if w is None:
            return None, t.root
        c = u if tree.parent[u] == w else tree.child_toward(w, u)
        top_poles = set(nodes[c].poles)
        if top_poles <= fv:
            # the lowest node on the path with the same dead poles
            v = c
            while v != u:
                nx = tree.child_toward(v, u)
                if set(nodes[nx].poles) != top_poles:
                    break
                v = nx
            return None, v
        p = min(z for z in top_poles if z not in fv)
        if w != t.root and p in nodes[w].poles:
            return self.reach[p]
        return self._local(p, w)

    def resolve(self, x: int) -> tuple[int | None, int]:
        """Most ancestral pole reached from ``x`` and the node it closes off in."""
        u = self.tree.phi[x]
        return self._local(x, u) if u in self.colored else self._climb(x, u)

    # -- query ---------------------------------------------------------------
    def connected(self, x: int, y: int) -> bool:
        for z in (x, y):
            if not 0 <= z < self.n:
                raise UnknownVertex(z)
            if z in self.fv:
                raise FailedEndpoint(z)
        if x == y:
            return True
        if self.tree is None:
            return any(i not in self.fe for i in range(len(self.edges)))
        x3, u3 = self.resolve(x)
        y3, v3 = self.resolve(y)
        if u3 != v3:
            return False
        if x3 is None:
            return True
        return self.models[u3].connected(x3, y3)


class BlockCutClimber:
    """Query side shared by the batch and the dynamic block-cut layers.

    Subclasses provide ``bc``, ``local``, ``blocks``, ``fv``, ``red``, ``blue``
    and ``marks``; ``_shortcut`` may return a precomputed answer for an
    articulation vertex.
    """

    def _shortcut(self, r: int) -> tuple[int | None, int] | None:
        return None

    def _marks(self) -> MarkedAncestorIndex:
        return self.marks

    def resolve(self, x: int) -> tuple[int | None, int]:
        """Farthest articulation vertex reached from ``x``, and the node it closes off in.

        ``(None, node)`` means the climb ended at an uncoloured node, where
        everything is connected.
        """
        bc = self.bc
        tree = bc.tree
        z, u = x, bc.phi[x]
        while True:
            if u in self.blue:
                r = bc.rep(u)
                if r < 0 or r in self.fv:
                    return z, u
                b = bc.block_index(u)
                loc = self.local[b]
                if not self.blocks[b].connected(loc[z], loc[r]):
                    return z, u
                hit = self._shortcut(r)
                if hit is not None:
                    return hit
                z, u = r, bc.phi[r]
                continue
            if u == bc.root:
                return None, u
            w = self._marks().nearest_marked_ancestor(tree.parent[u])
            if w is None:
                return None, bc.root
            c = u if tree.parent[u] == w else tree.child_toward(w, u)
            if w in self.red:
                return None, c
            z, u = bc.art_vertex[c], w

    def _check_alive(self, x: int) -> None:
        if not 0 <= x < self.g.n:
            raise UnknownVertex(x)
        if x in self.fv:
            raise FailedEndpoint(x)

    def connected(self, x: int, y: int) -> bool:
        self._check_alive(x)
        self._check_alive(y)
        if x == y:
            return True
        x3, c = self.resolve(x)
        y3, c2 = self.resolve(y)
        if c != c2:
            return False
        if x3 is None:
            return True
        b = self.bc.block_index(c)
        loc = self.local[b]
        return self.blocks[b].connected(loc[x3], loc[y3])


class GeneralOracle(BlockCutClimber):
    """Batch-failure connectivity oracle for a connected planar graph."""

    def __init__(self, g: RotationGraph) -> None:
        self.g = g
        labelled = [(i, a, b) for i, (a, b) in enumerate(g.endpoints)]
        bc = build_block_cut(g.n, labelled)
        self.bc = bc
        self.local: list[dict[int, int]] = []
        self.blocks: list[BlockOracle] = []
        self.edge_block: dict[int, tuple[int, int]] = {}
        for b, (eids, verts) in enumerate(zip(bc.block_edges, bc.block_vertices)):
            loc = {v: i for i, v in enumerate(verts)}
            self.local.append(loc)
            for k, e in enumerate(eids):
                self.edge_block[e] = (b, k)
            self.blocks.append(BlockOracle(len(verts), [(loc[g.endpoints[e][0]], loc[g.endpoints[e][1]]) for e in eids]))
        self.art_node = {v: i for i, v in enumerate(bc.art_vertex) if v >= 0}
        self.fv: frozenset[int] = frozenset()
        self.fe: frozenset[int] = frozenset()
        self.red: set[int] = set()
        self.blue: set[int] = set()
        self.reach: dict[int, tuple[int | None, int]] = {}
        self.marks = MarkedAncestorIndex(bc.tree, ())
        self.stats: dict[str, int] = {}

    def update(self, F: Iterable = (), *, vertices: Iterable[int] = (), edges: Iterable[int] = ()) -> None:
        g, bc = self.g, self.bc
        fv, fe = split_failures(g, F)
        fv.update(vertices)
        fe.update(edges)
        for x in fv:
            if not 0 <= x < g.n:
                raise UnknownElement(f"vertex {x}")
        for e in fe:
            if not 0 <= e < g.m:
                raise UnknownElement(f"edge {e}")
        self.fv, self.fe = frozenset(fv), frozenset(fe)

        red = {self.art_node[x] for x in fv if x in self.art_node}
        per_block: dict[int, tuple[set[int], set[int]]] = {}
        for x in fv:
            for c in blocks_around(bc, x):
                per_block.setdefault(c, (set(), set()))[0].add(x)
        for e in fe:
            b, _ = self.edge_block[e]
            per_block.setdefault(bc.node_of_block(b), (set(), set()))[1].add(e)
        # blue: some failure other than the block's own articulation point
        blue = {c for c, (vs, es) in per_block.items() if es or any(v != bc.rep(c) for v in vs)}
        for c in blue:
            b = bc.block_index(c)
            loc = self.local[b]
            vs, es = per_block[c]
            self.blocks[b].update([loc[v] for v in vs], [self.edge_block[e][1] for e in es])
        self.red, self.blue = red, blue
        self.marks = MarkedAncestorIndex(bc.tree, red | blue)
        # farthest reach of every live block representative, top-down
        self.reach = {}
        for c in sorted(blue, key=bc.tree.pre.__getitem__):
            r = bc.rep(c)
            if r >= 0 and r not in fv and r not in self.reach:
                self.reach[r] = self.resolve(r)
        self.stats = {"red": len(red), "blue": len(blue)}

    def _shortcut(self, r: int) -> tuple[int | None, int] | None:
        return self.reach.get(r)


def blocks_around(bc, x: int) -> list[int]:
    """Block-cut nodes of the blocks containing vertex ``x``."""
    node = bc.phi[x]
    if bc.is_block(node):
        return [node]
    out = list(bc.tree.children[node])
    if bc.parent[node] >= 0:
        out.append(bc.parent[node])
    return out


def preprocess(g: RotationGraph) -> GeneralOracle:
    return GeneralOracle(g)
