"""Combinatorial plane graphs: rotation systems, faces, duals, tree-cotree pairs.

Darts are numbered ``0 .. 2m-1``; dart ``2i`` runs from the first endpoint of
edge ``i`` to the second, dart ``2i+1`` back.  ``nxt[d]`` is the
counterclockwise successor of ``d`` around its tail.  The face left of ``d``
is the orbit of ``d`` under ``d -> nxt[d ^ 1]``.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import CotreeNotSpanning, Disconnected, EulerViolation, MalformedRotation


def twin(d: int) -> int:
    return d ^ 1


class RotationGraph:
    """A connected plane multigraph given by its rotation system."""

    def __init__(
        self,
        n: int,
        rotations: Sequence[Sequence[int]],
        endpoints: Sequence[tuple[int, int]],
        *,
        check_euler: bool = True,
    ) -> None:
        m = len(endpoints)
        if len(rotations) != n:
            raise MalformedRotation(f"expected {n} rotation lists, got {len(rotations)}")
        self.n = n
        self.m = m
        self.endpoints = [(int(a), int(b)) for a, b in endpoints]
        tail = [0] * (2 * m)
        for i, (a, b) in enumerate(self.endpoints):
            if not (0 <= a < n and 0 <= b < n):
                raise MalformedRotation(f"edge {i} has endpoint outside [0, {n})")
            tail[2 * i] = a
            tail[2 * i + 1] = b
        self.tail = tail
        nxt = [-1] * (2 * m)
        seen = [False] * (2 * m)
        self.rotations = []
        for v, rot in enumerate(rotations):
            rot = [int(d) for d in rot]
            for d in rot:
                if not 0 <= d < 2 * m:
                    raise MalformedRotation(f"vertex {v}: dart {d} out of range")
                if seen[d]:
                    raise MalformedRotation(f"dart {d} listed twice")
                if tail[d] != v:
                    raise MalformedRotation(f"dart {d} listed at vertex {v} but its tail is {tail[d]}")
                seen[d] = True
            k = len(rot)
            for j, d in enumerate(rot):
                nxt[d] = rot[(j + 1) % k]
            self.rotations.append(rot)
        missing = [d for d in range(2 * m) if not seen[d]]
        if missing:
            raise MalformedRotation(f"dart {missing[0]} missing from rotations")
        self.nxt = nxt
        if not self._is_connected():
            raise Disconnected("graph is not connected")
        if check_euler and self.n - self.m + self.num_faces != 2:
            raise EulerViolation(
                f"n - m + f = {self.n} - {self.m} + {self.num_faces} != 2"
            )

    # -- basic accessors -------------------------------------------------
    def head(self, d: int) -> int:
        return self.tail[d ^ 1]

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> list[int]:
        return [self.tail[d ^ 1] for d in self.rotations[v]]

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per vertex, ``(neighbor, edge id)`` in rotation order."""
        return [[(self.tail[d ^ 1], d >> 1) for d in rot] for rot in self.rotations]

    def _is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for d in self.rotations[v]:
                w = self.tail[d ^ 1]
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    # -- faces -----------------------------------------------------------
    @cached_property
    def _face_data(self) -> tuple[list[int], list[list[int]], list[int]]:
        m2 = 2 * self.m
        face_of = [-1] * m2
        pos = [0] * m2
        walks: list[list[int]] = []
        nxt = self.nxt
        for start in range(m2):
            if face_of[start] != -1:
                continue
            fid = len(walks)
            walk = []
            d = start
            while face_of[d] == -1:
                face_of[d] = fid
                pos[d] = len(walk)
                walk.append(d)
                d = nxt[d ^ 1]
            walks.append(walk)
        return face_of, walks, pos

    @property
    def num_faces(self) -> int:
        if self.m == 0:
            return 1
        return len(self._face_data[1])

    def faces(self) -> "FaceStructure":
        return FaceStructure(self)


class FaceStructure:
    """Face id per dart and the dart walk of every face."""

    def __init__(self, g: RotationGraph) -> None:
        face_of, walks, pos = g._face_data
        self.face_of = face_of
        self.walks = walks
        self.pos_in_face = pos
        self.count = g.num_faces

    def rep(self, f: int) -> int:
        return self.walks[f][0]

    def __len__(self) -> int:
        return self.count


def faces(g: RotationGraph) -> FaceStructure:
    return g.faces()


class DualGraph:
    """Dual of a plane graph; dual edge ``i`` crosses primal edge ``i``.

    Dual dart ``d`` is primal dart ``d`` seen from the face left of it, so the
    dual rotation at a face is that face's walk.
    """

    def __init__(self, g: RotationGraph, fs: FaceStructure | None = None) -> None:
        fs = fs or g.faces()
        self.primal = g
        self.fs = fs
        ends = [(fs.face_of[2 * i], fs.face_of[2 * i + 1]) for i in range(g.m)]
        self.graph = RotationGraph(fs.count, fs.walks, ends)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


def dual(g: RotationGraph, fs: FaceStructure | None = None) -> DualGraph:
    return DualGraph(g, fs)


class RootedTree:
    """Pre/post stamps, depths and O(1) lca over a rooted tree.

    ``parent[root] == -1``.  lca uses an Euler tour with a sparse table over
    the depth sequence.
    """

    def __init__(self, parent: Sequence[int], root: int) -> None:
        n = len(parent)
        self.n = n
        self.root = root
        self.parent = list(parent)
        children: list[list[int]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if p >= 0:
                children[p].append(v)
        self.children = children
        pre = [-1] * n
        post = [-1] * n
        depth = [0] * n
        first = [0] * n
        euler: list[int] = []
        clock = 0
        stack = [(root, 0)]
        pre[root] = clock
        clock += 1
        first[root] = 0
        euler.append(root)
        order = [root]
        while stack:
            v, i = stack[-1]
            if i < len(children[v]):
                stack[-1] = (v, i + 1)
                c = children[v][i]
                depth[c] = depth[v] + 1
                pre[c] = clock
                clock += 1
                first[c] = len(euler)
                euler.append(c)
                order.append(c)
                stack.append((c, 0))
            else:
                stack.pop()
                post[v] = clock
                clock += 1
                if stack:
                    euler.append(stack[-1][0])
        if len(order) != n:
            raise ValueError("parent array does not describe a single rooted tree")
        self.pre = pre
        self.post = post
        self.depth = depth
        self.preorder = order
        self._first = first
        self._euler = euler
        self._build_sparse()

    def _build_sparse(self) -> None:
        eul = np.asarray(self._euler, dtype=np.int64)
        dep = np.asarray(self.depth, dtype=np.int64)[eul]
        # key packs (depth, vertex) so min() yields the shallowest vertex
        key = dep * (self.n + 1) + eul
        table = [key]
        k = 1
        while 2 * k <= len(key):
            prev = table[-1]
            table.append(np.minimum(prev[:-k], prev[k:]))
            k *= 2
        self._table = [t.tolist() for t in table]
        self._mod = self.n + 1

    def lca(self, u: int, v: int) -> int:
        a = self._first[u]
        b = self._first[v]
        if a > b:
            a, b = b, a
        k = (b - a + 1).bit_length() - 1
        row = self._table[k]
        x = row[a]
        y = row[b - (1 << k) + 1]
        return (x if x < y else y) % self._mod

    def is_ancestor(self, x: int, y: int) -> bool:
        """True when ``x`` is an ancestor of ``y`` (inclusive)."""
        return self.pre[x] <= self.pre[y] and self.post[y] <= self.post[x]

    def child_toward(self, anc: int, desc: int) -> int:
        """The child of ``anc`` on the path to its strict descendant ``desc``."""
        ch = self.children[anc]
        p = self.pre[desc]
        lo, hi = 0, len(ch) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.pre[ch[mid]] <= p:
                lo = mid
            else:
                hi = mid - 1
        return ch[lo]

    def path_up(self, u: int, anc: int) -> list[int]:
        out = [u]
        while u != anc:
            u = self.parent[u]
            out.append(u)
        return out


TreeOrderIndex = RootedTree


def lca(idx: RootedTree, u: int, v: int) -> int:
    return idx.lca(u, v)


class TreeCotreePair:
    """BFS tree ``T`` of the primal and the dual tree ``T*`` of the rest.

    ``in_tree[e]`` marks primal tree edges; every other edge is in ``T*``.
    ``parent_edge[v]`` / ``dual_parent_edge[f]`` give the tree edge toward the
    respective roots (``-1`` at the root).
    """

    def __init__(
        self,
        g: RotationGraph,
        fs: FaceStructure | None = None,
        dualg: DualGraph | None = None,
        outer_face: int | None = None,
        *,
        tree_edges: Iterable[int] | None = None,
        root: int = 0,
    ) -> None:
        fs = fs or g.faces()
        self.g = g
        self.fs = fs
        self.outer_face = fs.face_of[0] if outer_face is None and g.m else (outer_face or 0)
        in_tree = [False] * g.m
        parent = [-1] * g.n
        parent_edge = [-1] * g.n
        if tree_edges is None:
            seen = [False] * g.n
            seen[root] = True
            q = deque([root])
            while q:
                v = q.popleft()
                for d in g.rotations[v]:
                    w = g.tail[d ^ 1]
                    if not seen[w]:
                        seen[w] = True
                        parent[w] = v
                        parent_edge[w] = d >> 1
                        in_tree[d >> 1] = True
                        q.append(w)
        else:
            for e in tree_edges:
                in_tree[e] = True
            adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
            for e in range(g.m):
                if in_tree[e]:
                    a, b = g.endpoints[e]
                    adj[a].append((b, e))
                    adj[b].append((a, e))
            seen = [False] * g.n
            seen[root] = True
            stack = [root]
            while stack:
                v = stack.pop()
                for w, e in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        parent[w] = v
                        parent_edge[w] = e
                        stack.append(w)
            if not all(seen) or sum(in_tree) != g.n - 1:
                raise ValueError("tree_edges is not a spanning tree")
        self.in_tree = in_tree
        self.parent = parent
        self.parent_edge = parent_edge
        self.root = root

        nf = fs.count
        dparent = [-1] * nf
        dparent_edge = [-1] * nf
        seen_f = [False] * nf
        seen_f[self.outer_face] = True
        q = deque([self.outer_face])
        reached = 1
        walks = fs.walks
        face_of = fs.face_of
        while q:
            f = q.popleft()
            for d in walks[f] if f < len(walks) else ():
                e = d >> 1
                if in_tree[e]:
                    continue
                h = face_of[d ^ 1]
                if not seen_f[h]:
                    seen_f[h] = True
                    dparent[h] = f
                    dparent_edge[h] = e
                    reached += 1
                    q.append(h)
        if reached != nf or g.m - (g.n - 1) != nf - 1:
            raise CotreeNotSpanning("complement of T does not span the dual")
        self.dual_parent = dparent
        self.dual_parent_edge = dparent_edge

    @cached_property
    def tree(self) -> RootedTree:
        return RootedTree(self.parent, self.root)

    @cached_property
    def dual_tree(self) -> RootedTree:
        return RootedTree(self.dual_parent, self.outer_face)

    def side_faces(self, e: int) -> tuple[int, int]:
        return self.fs.face_of[2 * e], self.fs.face_of[2 * e + 1]

    def dual_path_edges(self, f: int, g: int) -> list[int]:
        t = self.dual_tree
        w = t.lca(f, g)
        out = []
        for x in (f, g):
            while x != w:
                out.append(self.dual_parent_edge[x])
                x = self.dual_parent[x]
        return out


def tree_cotree(
    g: RotationGraph,
    fs: FaceStructure | None = None,
    dualg: DualGraph | None = None,
    outer_face: int | None = None,
) -> TreeCotreePair:
    return TreeCotreePair(g, fs, dualg, outer_face)


def reconnecting_cotree_edges(pair: TreeCotreePair, e: int) -> set[int]:
    """Edges on the ``T*`` path between the two faces beside tree edge ``e``."""
    if not pair.in_tree[e]:
        raise ValueError(f"edge {e} is not a tree edge")
    f, g = pair.side_faces(e)
    return set(pair.dual_path_edges(f, g))


def build_rotation_graph(
    n: int, rotations: Sequence[Sequence[int]], endpoints: Sequence[tuple[int, int]]
) -> RotationGraph:
    return RotationGraph(n, rotations, endpoints)


def from_neighbor_rotations(n: int, rot: Sequence[Sequence[int]]) -> RotationGraph:
    """Build from per-vertex ccw neighbor lists of a simple graph."""
    eid: dict[tuple[int, int], int] = {}
    endpoints: list[tuple[int, int]] = []
    for v in range(n):
        for w in rot[v]:
            key = (min(v, w), max(v, w))
            if key not in eid:
                eid[key] = len(endpoints)
                endpoints.append(key)
    rotations = []
    for v in range(n):
        darts = []
        for w in rot[v]:
            e = eid[(min(v, w), max(v, w))]
            darts.append(2 * e if endpoints[e][0] == v else 2 * e + 1)
        rotations.append(darts)
    return RotationGraph(n, rotations, endpoints)


def restrict(g: RotationGraph, keep_edges: Sequence[int]) -> RotationGraph:
    """The plane subgraph on the given edges, renumbered in the given order."""
    new_id = {e: i for i, e in enumerate(keep_edges)}
    endpoints = [g.endpoints[e] for e in keep_edges]
    rotations = []
    for rot in g.rotations:
        r = []
        for d in rot:
            e = d >> 1
            if e in new_id:
                r.append(2 * new_id[e] + (d & 1))
        rotations.append(r)
    return RotationGraph(g.n, rotations, endpoints)


def embed_simple(n: int, edges: Sequence[tuple[int, int]]) -> RotationGraph:
    """Planar embedding of a connected simple graph, edge ``i`` = ``edges[i]``.

    Raises EulerViolation when the graph is not planar.
    """
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    ok, emb = nx.check_planarity(G)
    if not ok:
        raise EulerViolation("graph is not planar")
    eid = {}
    for i, (a, b) in enumerate(edges):
        eid[(a, b)] = 2 * i
        eid[(b, a)] = 2 * i + 1
    rotations = [[eid[(v, w)] for w in reversed(list(emb.neighbors_cw_order(v)))] for v in range(n)]
    return RotationGraph(n, rotations, list(edges))
