"""Connectivity under a growing set of failures in general planar graphs.

Each SPQR node keeps two small oracles over its model graph: one where the
heavy child's virtual edge is alive and one where it is dead.  Every other
virtual edge follows the current validity of its child (are the child's
poles still connected below it?).  Comparing the twins colours a node
white, grey or black, and along a heavy path the validity of any node is
read off the nearest non-grey node below it.  Pole-to-pole reachability
along a heavy path is a product of 2x2 boolean matrices, kept in a
segment tree, so a query hops from heavy path to heavy path towards the
root.

A failed vertex is failed in the node that owns it, and each of its real
edges is failed wherever that edge lives.  A failed pole is therefore
isolated in every model that still lists it.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right, insort
from typing import Sequence

from .decomp import build_block_cut, build_spqr
from .decremental import DecrementalOracle
from .errors import AlreadyFailed, FailedEndpoint, UnknownEdge, UnknownVertex
from .matrix_tree import ONES, MatrixProductTree, apply, pack
from .order_tools import MarkedAncestorIndex
from .planar_core import RotationGraph, embed_simple
from .reduction_d import BlockCutClimber, blocks_around

WHITE, GREY, BLACK = "white", "grey", "black"


class RecoveryUnsupported(NotImplementedError):
    """The inner oracle only supports deletions."""


# -- twin oracles ------------------------------------------------------------
class _RigidTwins:
    def __init__(self, model, dead: int | None, heavy: int | None, seed: int) -> None:
        verts = sorted({z for _, a, b in model for z in (a, b)})
        self.vid = {v: i for i, v in enumerate(verts)}
        self.eid = {lab: i for i, (lab, _, _) in enumerate(model)}
        self.ends = {lab: (a, b) for lab, a, b in model}
        g = embed_simple(len(verts), [(self.vid[a], self.vid[b]) for _, a, b in model])
        self.with_heavy = DecrementalOracle(g, seed=seed)
        self.without_heavy = DecrementalOracle(g, seed=seed + 1) if heavy is not None else self.with_heavy
        self.failed: set[int] = set()
        self.dead: set[int] = set()
        if dead is not None:
            self.set_edge(dead, False)
        if heavy is not None:
            self.without_heavy.fail_edge(self.eid[heavy])

    def _oracles(self):
        if self.without_heavy is self.with_heavy:
            return (self.with_heavy,)
        return self.with_heavy, self.without_heavy

    def fail_vertex(self, z: int) -> None:
        self.failed.add(z)
        for o in self._oracles():
            o.fail_vertex(self.vid[z])

    def set_edge(self, label: int, alive: bool) -> None:
        if alive:
            raise RecoveryUnsupported("rigid twins are decremental")
        if label in self.dead:
            return
        self.dead.add(label)
        a, b = self.ends[label]
        if a in self.failed or b in self.failed:
            return
        for o in self._oracles():
            o.fail_edge(self.eid[label])

    def connected(self, a: int, b: int, heavy_alive: bool) -> bool:
        if a in self.failed or b in self.failed:
            return False
        o = self.with_heavy if heavy_alive else self.without_heavy
        return o.connected(self.vid[a], self.vid[b])


class _SeriesTwins:
    """Cycle model; a pair is connected when one of its two arcs is clean."""

    def __init__(self, model, dead: int | None, heavy: int | None) -> None:
        adj: dict[int, list[tuple[int, int]]] = {}
        for lab, a, b in model:
            adj.setdefault(a, []).append((b, lab))
            adj.setdefault(b, []).append((a, lab))
        start = model[0][1]
        order, labels = [start], []
        prev, v = None, start
        while True:
            w, lab = next((w, lab) for w, lab in adj[v] if lab != prev)
            labels.append(lab)
            if w == start:
                break
            order.append(w)
            v, prev = w, lab
        self.vpos = {v: 2 * i for i, v in enumerate(order)}
        self.epos = {lab: 2 * i + 1 for i, lab in enumerate(labels)}
        self.broken: list[int] = []
        self.heavy_pos = self.epos[heavy] if heavy is not None else None
        self.failed: set[int] = set()
        if dead is not None:
            self.set_edge(dead, False)

    def fail_vertex(self, z: int) -> None:
        self.failed.add(z)
        insort(self.broken, self.vpos[z])

    def set_edge(self, label: int, alive: bool) -> None:
        p = self.epos[label]
        k = bisect_left(self.broken, p)
        present = k < len(self.broken) and self.broken[k] == p
        if alive and present:
            del self.broken[k]
        elif not alive and not present:
            self.broken.insert(k, p)

    def connected(self, a: int, b: int, heavy_alive: bool) -> bool:
        if a in self.failed or b in self.failed:
            return False
        if a == b:
            return True
        x, y = sorted((self.vpos[a], self.vpos[b]))
        inside = bisect_left(self.broken, y) - bisect_right(self.broken, x)
        total = len(self.broken)
        if not heavy_alive and self.heavy_pos is not None:
            total += 1
            inside += x < self.heavy_pos < y
        return inside == 0 or inside == total


class _ParallelTwins:
    def __init__(self, model, dead: int | None, heavy: int | None) -> None:
        self.others = {lab for lab, _, _ in model if lab not in (dead, heavy)}
        self.alive = set(self.others)
        self.has_heavy = heavy is not None
        self.failed: set[int] = set()

    def fail_vertex(self, z: int) -> None:
        self.failed.add(z)

    def set_edge(self, label: int, alive: bool) -> None:
        if label not in self.others:
            return
        if alive:
            self.alive.add(label)
        else:
            self.alive.discard(label)

    def connected(self, a: int, b: int, heavy_alive: bool) -> bool:
        if a in self.failed or b in self.failed:
            return False
        return a == b or bool(self.alive) or (heavy_alive and self.has_heavy)


# -- one biconnected block ---------------------------------------------------
class DynamicBlockOracle:
    """Decremental connectivity for a biconnected multigraph on ``0 .. n-1``.

    Edges are ``(a, b)`` pairs failed by index.  Blocks with fewer than
    three edges need no decomposition.
    """

    def __init__(self, n: int, edges: Sequence[tuple[int, int]], *, seed: int = 0) -> None:
        self.n = n
        self.edges = list(edges)
        self.failed_vertices: set[int] = set()
        self.failed_edges: set[int] = set()
        self.touched_max = 0
        self.tree = None
        if len(self.edges) < 3:
            return
        t = build_spqr(n, self.edges)
        self.tree = t
        nodes, root = t.nodes, t.root
        self.owner: dict[int, int] = {}
        for u, nd in enumerate(nodes):
            for lab, _, _ in nd.model:
                if t.is_real(lab):
                    self.owner[lab] = u
        self.incident: list[list[int]] = [[] for _ in range(n)]
        for e, (a, b) in enumerate(self.edges):
            self.incident[a].append(e)
            if b != a:
                self.incident[b].append(e)
        self.dead_edges: set[int] = set()

        # heavy paths, numbered 1 at the bottom up to len at the head
        self.path_of = [0] * len(nodes)
        self.pos = [0] * len(nodes)
        self.paths: list[list[int]] = []
        for u in t.tree.preorder:
            if u != root and t.heavy[nodes[u].parent] == u:
                continue
            chain = [u]
            while t.heavy[chain[-1]] >= 0:
                chain.append(t.heavy[chain[-1]])
            chain.reverse()
            pid = len(self.paths)
            self.paths.append([-1] + chain)
            for i, v in enumerate(chain, 1):
                self.path_of[v], self.pos[v] = pid, i
        self.head = [p[-1] for p in self.paths]

        self.twins = []
        for u, nd in enumerate(nodes):
            dead = None if u == root else nd.polar[0]
            h = t.heavy[u]
            heavy = nodes[h].polar[0] if h >= 0 else None
            if nd.kind == "R":
                self.twins.append(_RigidTwins(nd.model, dead, heavy, seed + 2 * u))
            elif nd.kind == "S":
                self.twins.append(_SeriesTwins(nd.model, dead, heavy))
            else:
                self.twins.append(_ParallelTwins(nd.model, dead, heavy))

        # every light child starts out valid; the root has no validity
        self.light_valid = [True] * len(nodes)
        self.color = [BLACK] * len(nodes)
        self.nongrey: list[list[int]] = [[] for _ in self.paths]
        self.matrices = [MatrixProductTree(len(p) - 1) for p in self.paths]
        for u in range(len(nodes)):
            self._refresh(u)
        self.touch_bound = math.ceil(math.log2(max(len(nodes), 2))) + 1

    # -- per-node state ------------------------------------------------------
    def _poles(self, u: int) -> list[int]:
        return sorted(self.tree.nodes[u].poles)

    def _refresh(self, u: int) -> None:
        """Recompute the colour and transfer matrix of ``u`` from its twins."""
        t = self.tree
        tw = self.twins[u]
        p0, p1 = self._poles(u)
        if u == t.root:
            color = BLACK
        elif not tw.connected(p0, p1, True):
            color = WHITE
        elif tw.connected(p0, p1, False):
            color = BLACK
        else:
            color = GREY
        pid, i = self.path_of[u], self.pos[u]
        lst = self.nongrey[pid]
        k = bisect_left(lst, i)
        listed = k < len(lst) and lst[k] == i
        want = color != GREY and u != t.root
        if want and not listed:
            lst.insert(k, i)
        elif listed and not want:
            del lst[k]
        self.color[u] = color
        h = t.heavy[u]
        if h >= 0:
            subs, poles = self._poles(h), [p0, p1]
            # rows and columns of failed poles may be stale; query vectors never
            # carry a failed pole, so they are never read
            sigma = pack([[tw.connected(s, p, False) for p in poles] for s in subs])
            if self.matrices[pid].sigma[i] != sigma:
                self.matrices[pid].update(i, sigma)

    def _valid(self, u: int) -> bool:
        """Are the poles of non-root ``u`` connected below it?"""
        pid, i = self.path_of[u], self.pos[u]
        lst = self.nongrey[pid]
        k = bisect_right(lst, i) - 1
        return self.color[self.paths[pid][lst[k]]] == BLACK

    def _heavy_alive(self, u: int) -> bool:
        h = self.tree.heavy[u]
        return h < 0 or self._valid(h)

    def _settle(self, u: int) -> int:
        """Refresh ``u`` and push validity changes up through path heads."""
        root = self.tree.root
        self._refresh(u)
        touched = 1
        h = self.head[self.path_of[u]]
        while h != root:
            ok = self._valid(h)
            if ok == self.light_valid[h]:
                break
            self.light_valid[h] = ok
            w = self.tree.nodes[h].parent
            self.twins[w].set_edge(self.tree.nodes[h].polar[0], ok)
            self._refresh(w)
            touched += 1
            h = self.head[self.path_of[w]]
        assert touched <= self.touch_bound, "more nodes touched than light depth allows"
        self.touched_max = max(self.touched_max, touched)
        return touched

    # -- updates -------------------------------------------------------------
    def fail_vertex(self, z: int) -> None:
        if not 0 <= z < self.n:
            raise UnknownVertex(z)
        if z in self.failed_vertices:
            raise AlreadyFailed(f"vertex {z}")
        self.failed_vertices.add(z)
        if self.tree is None:
            return
        u = self.tree.phi[z]
        self.twins[u].fail_vertex(z)
        self._settle(u)
        for e in self.incident[z]:
            if e in self.dead_edges:
                continue
            self.dead_edges.add(e)
            if self.owner[e] != u:
                self._kill_edge(e)

    def fail_edge(self, e: int) -> None:
        if not 0 <= e < len(self.edges):
            raise UnknownEdge(e)
        if e in self.failed_edges:
            raise AlreadyFailed(f"edge {e}")
        self.failed_edges.add(e)
        if self.tree is None or e in self.dead_edges:
            return
        self.dead_edges.add(e)
        self._kill_edge(e)

    def _kill_edge(self, e: int) -> None:
        u = self.owner[e]
        self.twins[u].set_edge(e, False)
        self._settle(u)

    # -- queries -------------------------------------------------------------
    def resolve(self, z: int) -> tuple[int, int]:
        """Most ancestral pole reached from ``z`` and the node it closes off in."""
        t = self.tree
        root = t.root
        u = t.phi[z]
        while u != root:
            pid, i = self.path_of[u], self.pos[u]
            path = self.paths[pid]
            tw = self.twins[u]
            alpha = self._heavy_alive(u)
            x = sum(1 << c for c, p in enumerate(self._poles(u)) if tw.connected(z, p, alpha))
            if x == 0:
                return z, u
            mt = self.matrices[pid]
            j = mt.search(x, ONES, i + 1)
            rho = apply(x, mt.product(i + 1, j))
            top = path[j]
            p = self._poles(top)[0 if rho & 1 else 1]
            if j < len(path) - 1:
                return p, path[j + 1]
            if top == root:
                return p, root
            z, u = p, t.phi[p]
        return z, root

    def connected(self, x: int, y: int) -> bool:
        for z in (x, y):
            if not 0 <= z < self.n:
                raise UnknownVertex(z)
            if z in self.failed_vertices:
                raise FailedEndpoint(z)
        if x == y:
            return True
        if self.tree is None:
            return any(i not in self.failed_edges for i in range(len(self.edges)))
        x3, u3 = self.resolve(x)
        y3, v3 = self.resolve(y)
        if u3 != v3:
            return False
        return self.twins[u3].connected(x3, y3, self._heavy_alive(u3))

    # -- audit ---------------------------------------------------------------
    def audit_colors(self) -> bool:
        """Recolour every node from its twins and compare with stored state."""
        t = self.tree
        if t is None:
            return True
        for u in range(len(t.nodes)):
            if u == t.root:
                continue
            tw = self.twins[u]
            p0, p1 = self._poles(u)
            expect = WHITE if not tw.connected(p0, p1, True) else BLACK if tw.connected(p0, p1, False) else GREY
            if expect != self.color[u]:
                return False
            listed = self.pos[u] in self.nongrey[self.path_of[u]]
            if listed != (expect != GREY):
                return False
        return True


# -- general graphs ----------------------------------------------------------
class DynamicOracle(BlockCutClimber):
    """Decremental connectivity for a connected planar graph.

    One dynamic block oracle per biconnected block; a failed articulation
    vertex is failed in every block around it, and queries climb the
    block-cut tree with live block queries.
    """

    def __init__(self, g: RotationGraph, *, seed: int = 0) -> None:
        self.g = g
        bc = build_block_cut(g.n, [(i, a, b) for i, (a, b) in enumerate(g.endpoints)])
        self.bc = bc
        self.local: list[dict[int, int]] = []
        self.blocks: list[DynamicBlockOracle] = []
        self.edge_block: dict[int, tuple[int, int]] = {}
        for b, (eids, verts) in enumerate(zip(bc.block_edges, bc.block_vertices)):
            loc = {v: i for i, v in enumerate(verts)}
            self.local.append(loc)
            for k, e in enumerate(eids):
                self.edge_block[e] = (b, k)
            pairs = [(loc[g.endpoints[e][0]], loc[g.endpoints[e][1]]) for e in eids]
            self.blocks.append(DynamicBlockOracle(len(verts), pairs, seed=seed + 7919 * b))
        self.art_node = {v: i for i, v in enumerate(bc.art_vertex) if v >= 0}
        self.fv: set[int] = set()
        self.fe: set[int] = set()
        self.red: set[int] = set()
        self.blue: set[int] = set()
        self.marks = MarkedAncestorIndex(bc.tree, ())
        self._stale = False

    def _marks(self) -> MarkedAncestorIndex:
        if self._stale:
            self.marks = MarkedAncestorIndex(self.bc.tree, self.red | self.blue)
            self._stale = False
        return self.marks

    def _color(self, c: int, failed_vertex: int | None = None) -> None:
        if c not in self.blue and failed_vertex != self.bc.rep(c):
            self.blue.add(c)
            self._stale = True

    def fail_vertex(self, x: int) -> None:
        if not 0 <= x < self.g.n:
            raise UnknownVertex(x)
        if x in self.fv:
            raise AlreadyFailed(f"vertex {x}")
        self.fv.add(x)
        bc = self.bc
        for c in blocks_around(bc, x):
            b = bc.block_index(c)
            self.blocks[b].fail_vertex(self.local[b][x])
            self._color(c, x)
        if x in self.art_node:
            self.red.add(self.art_node[x])
            self._stale = True

    def fail_edge(self, e: int) -> None:
        if not 0 <= e < self.g.m:
            raise UnknownEdge(e)
        if e in self.fe:
            raise AlreadyFailed(f"edge {e}")
        self.fe.add(e)
        b, k = self.edge_block[e]
        self.blocks[b].fail_edge(k)
        self._color(self.bc.node_of_block(b))

    @property
    def touched_max(self) -> int:
        return max((blk.touched_max for blk in self.blocks), default=0)


def build(g: RotationGraph) -> DynamicOracle:
    return DynamicOracle(g)
