"""Decremental connectivity for triconnected plane graphs.

Keeps the graph made of surviving tree edges plus the current witnessing
edges in a fully dynamic connectivity structure.  A failure removes at most
three tree edges and adds at most three witnesses, so the inner structure
sees O(1) operations per failure.
"""

from __future__ import annotations

from typing import Iterable

from .dynconn import DynamicConnectivity
from .errors import AlreadyFailed, FailedEndpoint, UnknownEdge, UnknownVertex
from .planar_core import RotationGraph
from .tri_oracle import TreeFrame


class DecrementalOracle(TreeFrame):
    def __init__(self, g: RotationGraph, *, tree_edges: Iterable[int] | None = None, seed: int = 0) -> None:
        super().__init__(g, tree_edges)
        self.alive = [True] * g.n
        self.failed_edges: set[int] = set()
        # witness edge -> faces whose climb ended just below it
        self.witness: dict[int, set[int]] = {}
        self.witness_at: list[set[int]] = [set() for _ in range(g.n)]
        self._jump: dict[int, int] = {}
        self.dc = DynamicConnectivity(g.n, seed=seed)
        in_tree = self.pair.in_tree
        self.dc.load_forest([(e, *g.endpoints[e]) for e in range(g.m) if in_tree[e]])
        self.failures = 0
        self.witness_insertions = 0

    # -- helpers -------------------------------------------------------------
    def _climb(self, f: int) -> int:
        """Nearest ancestor of face ``f`` whose parent edge has not failed."""
        dparent, dpedge = self.pair.dual_parent, self.pair.dual_parent_edge
        root = self.dual_tree.root
        failed, jump = self.failed_edges, self._jump
        seen = []
        while f != root and dpedge[f] in failed:
            seen.append(f)
            f = jump.get(f, dparent[f])
        for x in seen:
            jump[x] = f
        return f

    def _add_witness(self, f: int) -> None:
        top = self._climb(f)
        if top == self.dual_tree.root:
            return
        e = self.pair.dual_parent_edge[top]
        a, b = self.g.endpoints[e]
        if not (self.alive[a] and self.alive[b]):
            return
        if e in self.witness:
            self.witness[e].add(top)
            return
        self.witness[e] = {top}
        self.witness_at[a].add(e)
        self.witness_at[b].add(e)
        self.dc.insert_edge(e, a, b)
        self.witness_insertions += 1

    def _drop_witness(self, e: int) -> set[int]:
        origins = self.witness.pop(e)
        a, b = self.g.endpoints[e]
        self.witness_at[a].discard(e)
        self.witness_at[b].discard(e)
        self.dc.delete_edge(e)
        return origins

    # -- operations ----------------------------------------------------------
    def fail_vertex(self, v: int) -> None:
        if not 0 <= v < self.g.n:
            raise UnknownVertex(v)
        if not self.alive[v]:
            raise AlreadyFailed(f"vertex {v}")
        self.failures += 1
        self.alive[v] = False
        g = self.g
        for d in g.rotations[v]:
            e = d >> 1
            if self.pair.in_tree[e] and e in self.dc:
                self.dc.delete_edge(e)
        for e in list(self.witness_at[v]):
            self._drop_witness(e)
        lca = self.dual_tree.lca
        for i in self.cycle.occurrences[v]:
            f1, f2 = self.corner_faces(2 * i)
            self._add_witness(lca(f1, f2))

    def fail_edge(self, e: int) -> None:
        if not 0 <= e < self.g.m:
            raise UnknownEdge(e)
        if e in self.failed_edges:
            raise AlreadyFailed(f"edge {e}")
        self.failures += 1
        self.failed_edges.add(e)
        if self.pair.in_tree[e]:
            if e in self.dc:
                self.dc.delete_edge(e)
            pos = self.cycle.pos
            for d in (2 * e, 2 * e + 1):
                f, _ = self.corner_faces(2 * pos[d] + 1)
                self._add_witness(f)
        elif e in self.witness:
            # the faces that chose e now climb past it
            for f in self._drop_witness(e):
                self._add_witness(f)

    def connected(self, u: int, v: int) -> bool:
        for x in (u, v):
            if not 0 <= x < self.g.n:
                raise UnknownVertex(x)
            if not self.alive[x]:
                raise FailedEndpoint(x)
        return self.dc.connected(u, v)

    # -- audit ---------------------------------------------------------------
    def expected_edges(self) -> set[int]:
        """Surviving tree edges plus witnesses, recomputed without any state."""
        g = self.g
        alive, failed = self.alive, self.failed_edges
        in_tree = self.pair.in_tree
        dparent, dpedge = self.pair.dual_parent, self.pair.dual_parent_edge
        root = self.dual_tree.root
        out = set()
        starts = []
        for e in range(g.m):
            a, b = g.endpoints[e]
            if in_tree[e] and e not in failed and alive[a] and alive[b]:
                out.add(e)
        for v in range(g.n):
            if not alive[v]:
                for i in self.cycle.occurrences[v]:
                    f1, f2 = self.corner_faces(2 * i)
                    starts.append(self.dual_tree.lca(f1, f2))
        pos = self.cycle.pos
        for e in failed:
            if in_tree[e]:
                for d in (2 * e, 2 * e + 1):
                    starts.append(self.corner_faces(2 * pos[d] + 1)[0])
        for f in starts:
            while f != root and dpedge[f] in failed:
                f = dparent[f]
            if f == root:
                continue
            e = dpedge[f]
            a, b = g.endpoints[e]
            if alive[a] and alive[b]:
                out.add(e)
        return out

    def audit(self) -> bool:
        return set(self.dc.ends) == self.expected_edges()


def new(g: RotationGraph) -> DecrementalOracle:
    return DecrementalOracle(g)
