"""Vertex and edge failures in triconnected plane graphs.

A spanning tree of maximum degree three is walked around as a closed dart
sequence.  Failed vertices, and midpoints of failed tree edges, cut that
sequence into paths; paths are glued back together by tree components and
by one witnessing non-tree edge per cut occurrence.

Positions along the walk use a doubled scale: the vertex occurrence at the
start of dart ``C[i]`` sits at ``2i`` and the midpoint of ``C[i]`` at ``2i+1``.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Iterable

from .barnette import barnette_tree
from .brute import split_failures
from .errors import FailedEndpoint, UnknownElement, UnknownVertex
from .planar_core import RotationGraph, TreeCotreePair


class EulerCycle:
    """Face walk of the spanning tree, with per-dart positions."""

    def __init__(self, g: RotationGraph, in_tree: list[bool], start_vertex: int) -> None:
        tail = g.tail
        tree_rot = [[d for d in rot if in_tree[d >> 1]] for rot in g.rotations]
        nxt_tree = {}
        for rot in tree_rot:
            k = len(rot)
            for i, d in enumerate(rot):
                nxt_tree[d] = rot[(i + 1) % k]
        darts: list[int] = []
        if tree_rot[start_vertex]:
            d = first = tree_rot[start_vertex][0]
            while True:
                darts.append(d)
                d = nxt_tree[d ^ 1]
                if d == first:
                    break
        self.darts = darts
        self.pos = {d: i for i, d in enumerate(darts)}
        occ: list[list[int]] = [[] for _ in range(g.n)]
        for i, d in enumerate(darts):
            occ[tail[d]].append(i)
        self.occurrences = occ
        self.first = [o[0] if o else -1 for o in occ]

    def __len__(self) -> int:
        return len(self.darts)


class TreeFrame:
    """Degree-3 tree, its dual cotree with lca, and the tree's Euler cycle."""

    def __init__(self, g: RotationGraph, tree_edges: Iterable[int] | None = None) -> None:
        self.g = g
        self.fs = g.faces()
        if tree_edges is None:
            bt = barnette_tree(g)
            tree_edges, root = bt.edges, bt.root
        else:
            tree_edges, root = list(tree_edges), 0
        self.pair = TreeCotreePair(g, self.fs, tree_edges=tree_edges, root=root)
        self.dual_tree = self.pair.dual_tree
        self.cycle = EulerCycle(g, self.pair.in_tree, root)

    def corner_faces(self, b: int) -> tuple[int, int]:
        """Faces of G at either end of the walk corner at doubled position ``b``."""
        C = self.cycle.darts
        face_of = self.fs.face_of
        i = b // 2
        if b % 2:
            return face_of[C[i]], face_of[C[i]]
        return face_of[C[i - 1]], face_of[C[i]]


class TriOracle(TreeFrame):
    def __init__(self, g: RotationGraph, *, tree_edges: Iterable[int] | None = None) -> None:
        super().__init__(g, tree_edges)
        self.stats: dict[str, int] = {}
        self._reset()

    def _reset(self) -> None:
        self.failed_vertices: frozenset[int] = frozenset()
        self.failed_edges: frozenset[int] = frozenset()
        self.boundaries: list[int] = []
        self.path_color: list[int] = []
        self.path_comp: list[int] = []
        self.lca_edges: list[tuple[int, int, int]] = []

    # -- update --------------------------------------------------------------
    def update(self, F: Iterable = (), *, vertices: Iterable[int] = (), edges: Iterable[int] = ()) -> None:
        fv, fe = split_failures(self.g, F)
        fv.update(vertices)
        fe.update(edges)
        g = self.g
        for x in fv:
            if not 0 <= x < g.n:
                raise UnknownElement(f"vertex {x}")
        for e in fe:
            if not 0 <= e < g.m:
                raise UnknownElement(f"edge {e}")
        self._reset()
        self.failed_vertices = frozenset(fv)
        self.failed_edges = frozenset(fe)
        cyc = self.cycle
        C, pos = cyc.darts, cyc.pos
        in_tree = self.pair.in_tree

        # failed occurrences along the walk
        cuts = [2 * i for x in fv for i in cyc.occurrences[x]]
        for e in fe:
            if in_tree[e]:
                cuts.append(2 * pos[2 * e] + 1)
                cuts.append(2 * pos[2 * e + 1] + 1)
        cuts.sort()
        self.boundaries = cuts
        nb = len(cuts)
        self.stats = {"paths": nb, "failures": len(fv) + len(fe), "lca_edges": 0,
                      "dual_steps": 0, "dual_visited": 0, "h_nodes": nb, "h_edges": 0}
        if nb == 0:
            return
        assert nb <= 3 * (len(fv) + len(fe)), "more paths than 3|F|"
        L2 = 2 * len(C)
        start_of = {b: j for j, b in enumerate(cuts)}

        def interior_empty(j: int) -> bool:
            a = cuts[j]
            b = cuts[j + 1] if j + 1 < nb else cuts[0] + L2
            # no even position strictly between a and b
            return b - a <= 1 or (b - a == 2 and a % 2 == 0)

        # greedy colouring: leaving through the end boundary, re-enter where
        # the walk next crosses back over the same tree edge
        color = [-1] * nb
        ncolors = 0
        for j in range(nb):
            if color[j] != -1 or interior_empty(j):
                continue
            k = j
            while color[k] == -1:
                color[k] = ncolors
                end = cuts[k + 1] if k + 1 < nb else cuts[0]
                if end % 2 == 0:
                    last = C[(end // 2 - 1) % len(C)]
                    k = start_of[2 * pos[last ^ 1]]
                else:
                    k = start_of[2 * pos[C[end // 2] ^ 1] + 1]
            assert k == j, "colour hand-off did not close up"
            ncolors += 1
        self.path_color = color

        # one witnessing non-tree edge per failed occurrence
        dt = self.dual_tree
        dparent, dpedge = self.pair.dual_parent, self.pair.dual_parent_edge
        root = dt.root
        jump: dict[int, int] = {}
        endpoints = g.endpoints
        L: list[int] = []
        for b in cuts:
            f1, f2 = self.corner_faces(b)
            top = self._climb(dt.lca(f1, f2), fe, jump, dparent, dpedge, root)
            if top == root:
                continue
            e = dpedge[top]
            a, c = endpoints[e]
            if a in fv or c in fv:
                continue
            L.append(e)
        self.stats["lca_edges"] = len(L)
        assert len(L) <= 3 * (len(fv) + len(fe)), "more lca edges than 3|F|"

        # bucket edge endpoints onto paths with one merged sweep
        first = cyc.first
        ends = sorted((2 * first[x], k) for k, e in enumerate(L) for x in endpoints[e])
        where = [[-1, -1] for _ in L]
        j = -1
        for p, k in ends:
            while j + 1 < nb and cuts[j + 1] < p:
                j += 1
            side = 0 if where[k][0] == -1 else 1
            where[k][side] = j if j >= 0 else nb - 1

        # auxiliary graph over paths
        parent = list(range(nb))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        h_edges = 0
        last_of_color: dict[int, int] = {}
        for k in range(nb):
            c = color[k]
            if c == -1:
                continue
            if c in last_of_color:
                parent[find(k)] = find(last_of_color[c])
                h_edges += 1
            last_of_color[c] = k
        for k, e in enumerate(L):
            p1, p2 = where[k]
            self.lca_edges.append((e, p1, p2))
            parent[find(p1)] = find(p2)
            h_edges += 1
        self.path_comp = [find(k) for k in range(nb)]
        self.stats["h_edges"] = h_edges
        self.stats["colors"] = ncolors

    def _climb(self, f: int, fe, jump, dparent, dpedge, root) -> int:
        """Nearest ancestor of ``f`` (inclusive) whose parent edge is alive."""
        seen = []
        while f != root and dpedge[f] in fe:
            if f in jump:
                f = jump[f]
                break
            seen.append(f)
            f = dparent[f]
            self.stats["dual_steps"] += 1
        while f != root and dpedge[f] in fe:
            f = jump[f] if f in jump else dparent[f]
        for x in seen:
            jump[x] = f
        self.stats["dual_visited"] += len(seen)
        return f

    # -- query ---------------------------------------------------------------
    def path_of(self, u: int) -> int:
        """Index of a path with ``u`` in its interior; -1 when nothing failed."""
        if not self.boundaries:
            return -1
        j = bisect_right(self.boundaries, 2 * self.cycle.first[u]) - 1
        return j if j >= 0 else len(self.boundaries) - 1

    def connected(self, u: int, v: int) -> bool:
        n = self.g.n
        for x in (u, v):
            if not 0 <= x < n:
                raise UnknownVertex(x)
            if x in self.failed_vertices:
                raise FailedEndpoint(x)
        if u == v or not self.boundaries:
            return True
        comp = self.path_comp
        return comp[self.path_of(u)] == comp[self.path_of(v)]


def preprocess(g: RotationGraph) -> TriOracle:
    return TriOracle(g)
