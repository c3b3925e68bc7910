"""Connectivity under a batch of edge failures via superfaces of the dual.

Failed edges, drawn in the dual, cut the sphere into superfaces; two
vertices are connected in ``G - F`` exactly when they lie in the same
superface.  Each update labels the endpoints of failed edges with their
superface, and a query looks up the first and last labelled vertices on the
tree path between the two query vertices.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable

from .errors import UnknownEdge, UnknownVertex
from .order_tools import MarkedAncestorIndex
from .planar_core import RotationGraph, TreeCotreePair


class _DSU:
    def __init__(self, n: int) -> None:
        self.p = list(range(n))

    def find(self, x: int) -> int:
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[a] = b


class SuperfaceLabeling:
    """Walk id per failed dart and the superface label of each labelled vertex."""

    def __init__(self, walk_of: dict[int, int], num_walks: int, label: dict[int, int], num_components: int):
        self.walk_of = walk_of
        self.num_walks = num_walks
        self.label = label
        self.num_components = num_components

    @property
    def num_labels(self) -> int:
        return len(set(self.label.values()))


class EdgeFailureOracle:
    def __init__(self, g: RotationGraph, outer_face: int | None = None) -> None:
        self.g = g
        self.fs = g.faces()
        self.pair = TreeCotreePair(g, self.fs, outer_face=outer_face)
        self.tree = self.pair.tree
        self.dual_tree = self.pair.dual_tree
        self.failed: frozenset[int] = frozenset()
        self.labeling = SuperfaceLabeling({}, 0, {}, 0)
        self._marks: MarkedAncestorIndex | None = None

    def update(self, F: Iterable[int]) -> None:
        F = frozenset(F)
        for e in F:
            if not 0 <= e < self.g.m:
                raise UnknownEdge(e)
        self.failed = F
        if not F:
            self.labeling = SuperfaceLabeling({}, 0, {}, 0)
            self._marks = None
            return
        fs = self.fs
        face_of, pos = fs.face_of, fs.pos_in_face
        # inherited rotation of the failed subgraph around each dual vertex
        at_face: dict[int, list[int]] = {}
        for d in sorted((d for e in F for d in (2 * e, 2 * e + 1)), key=lambda d: (face_of[d], pos[d])):
            at_face.setdefault(face_of[d], []).append(d)
        sigma: dict[int, int] = {}
        face_pos: dict[int, list[int]] = {}
        for f, ds in at_face.items():
            k = len(ds)
            for i, d in enumerate(ds):
                sigma[d] = ds[(i + 1) % k]
            face_pos[f] = [pos[d] for d in ds]

        walk_of: dict[int, int] = {}
        nwalks = 0
        for d0 in sigma:
            if d0 in walk_of:
                continue
            d = d0
            while d not in walk_of:
                walk_of[d] = nwalks
                d = sigma[d ^ 1]
            nwalks += 1

        # components of the failed subgraph over dual vertices
        faces = list(at_face)
        fidx = {f: i for i, f in enumerate(faces)}
        comp = _DSU(len(faces))
        for e in F:
            comp.union(fidx[face_of[2 * e]], fidx[face_of[2 * e + 1]])
        shallowest: dict[int, int] = {}
        depth = self.dual_tree.depth
        for f in faces:
            r = comp.find(fidx[f])
            if r not in shallowest or depth[f] < depth[shallowest[r]]:
                shallowest[r] = f

        def walk_at_corner(f: int, x: int) -> int:
            # walk passing the corner at f where non-failed dart x leaves
            ds = at_face[f]
            i = bisect_left(face_pos[f], pos[x]) - 1
            return walk_of[sigma[ds[i]]]

        outer = nwalks
        dsu = _DSU(nwalks + 1)
        dt = self.dual_tree
        dparent, dpedge = self.pair.dual_parent, self.pair.dual_parent_edge
        hosts = MarkedAncestorIndex(dt, faces)
        for f in shallowest.values():
            if f == dt.root:
                continue
            e = dpedge[f]
            x = 2 * e if face_of[2 * e] == f else 2 * e + 1
            w = walk_at_corner(f, x)
            top = hosts.nearest_marked_ancestor(dparent[f])
            if top is None:
                dsu.union(w, outer)
                continue
            c = dt.child_toward(top, f)
            e2 = dpedge[c]
            x2 = 2 * e2 if face_of[2 * e2] == top else 2 * e2 + 1
            dsu.union(w, walk_at_corner(top, x2))

        tail = self.g.tail
        label: dict[int, int] = {}
        for d, w in walk_of.items():
            v = tail[d]
            lab = dsu.find(w)
            old = label.setdefault(v, lab)
            assert old == lab, "a vertex received two superface labels"
        self.labeling = SuperfaceLabeling(walk_of, nwalks, label, len(shallowest))
        self._marks = MarkedAncestorIndex(self.tree, label.keys())

    def connected(self, u: int, v: int) -> bool:
        n = self.g.n
        if not (0 <= u < n):
            raise UnknownVertex(u)
        if not (0 <= v < n):
            raise UnknownVertex(v)
        if u == v or self._marks is None:
            return True
        pm = self._marks.path_marks(u, v)
        if pm is None:
            return True
        lab = self.labeling.label
        return lab[pm[0]] == lab[pm[1]]


def preprocess(g: RotationGraph) -> EdgeFailureOracle:
    return EdgeFailureOracle(g)
