"""Block-cut trees and SPQR trees.

Both are built directly: block-cut trees by the lowpoint DFS, SPQR trees top
down, splitting at the poles (P), at cut vertices of the graph minus its
polar edge (S), or at all maximal separation pairs found by exhaustive
search (R).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import LabelMismatch, NotBiconnected
from .planar_core import RootedTree

Edge = tuple[int, int, int]  # (label, a, b)


# -- block-cut tree ----------------------------------------------------------

def biconnected_components(n: int, edges: Sequence[Edge]) -> tuple[list[list[int]], set[int]]:
    """Edge-index lists of the blocks, and the articulation points.

    Self-loops are ignored.  Vertices without edges get no block.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, (_, a, b) in enumerate(edges):
        if a != b:
            adj[a].append((b, i))
            adj[b].append((a, i))
    disc = [-1] * n
    low = [0] * n
    clock = 0
    blocks: list[list[int]] = []
    arts: set[int] = set()
    estack: list[int] = []
    for s in range(n):
        if disc[s] != -1 or not adj[s]:
            continue
        disc[s] = low[s] = clock
        clock += 1
        children = 0
        stack = [(s, -1, iter(adj[s]))]
        while stack:
            v, via, it = stack[-1]
            pushed = False
            for w, i in it:
                if i == via:
                    continue
                if disc[w] == -1:
                    estack.append(i)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, i, iter(adj[w])))
                    pushed = True
                    break
                if disc[w] < disc[v]:
                    estack.append(i)
                    low[v] = min(low[v], disc[w])
            if pushed:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                block = []
                while True:
                    i = estack.pop()
                    block.append(i)
                    if i == via:
                        break
                blocks.append(block)
                if p != s:
                    arts.add(p)
                else:
                    children += 1
        if children >= 2:
            arts.add(s)
    return blocks, arts


@dataclass
class BlockCutTree:
    """Tree over articulation points and blocks.

    Nodes ``0 .. len(arts)-1`` are articulation points (``art_vertex``), the
    rest are blocks.  A graph without articulation points gets a virtual
    articulation node with ``art_vertex == -1`` as root.
    """

    art_vertex: list[int]
    block_edges: list[list[int]]
    block_vertices: list[list[int]]
    parent: list[int]
    root: int
    phi: list[int]
    tree: RootedTree = field(repr=False)

    def is_block(self, x: int) -> bool:
        return x >= len(self.art_vertex)

    def block_index(self, x: int) -> int:
        return x - len(self.art_vertex)

    def node_of_block(self, b: int) -> int:
        return len(self.art_vertex) + b

    def rep(self, x: int) -> int:
        """Vertex of the articulation node above block node ``x`` (-1 for the virtual root)."""
        return self.art_vertex[self.parent[x]]


def build_block_cut(n: int, edges: Sequence[Edge]) -> BlockCutTree:
    blocks, arts = biconnected_components(n, edges)
    block_vertices = []
    for blk in blocks:
        vs = set()
        for i in blk:
            vs.add(edges[i][1])
            vs.add(edges[i][2])
        block_vertices.append(sorted(vs))
    # isolated vertices (only possible when n == 1) get an empty block
    covered = set(v for vs in block_vertices for v in vs)
    for v in range(n):
        if v not in covered:
            blocks.append([])
            block_vertices.append([v])
    art_list = sorted(arts)
    virtual = not art_list
    art_vertex = art_list if art_list else [-1]
    na = len(art_vertex)
    art_node = {v: i for i, v in enumerate(art_list)}
    nodes = na + len(blocks)
    adj: list[list[int]] = [[] for _ in range(nodes)]
    for b, vs in enumerate(block_vertices):
        for v in vs:
            if v in art_node:
                adj[art_node[v]].append(na + b)
                adj[na + b].append(art_node[v])
    if virtual:
        for b in range(len(blocks)):
            adj[0].append(na + b)
            adj[na + b].append(0)
    parent = [-1] * nodes
    seen = [False] * nodes
    seen[0] = True
    order = [0]
    for x in order:
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                order.append(y)
    phi = [-1] * n
    for b, vs in enumerate(block_vertices):
        for v in vs:
            phi[v] = art_node[v] if v in art_node else na + b
    return BlockCutTree(art_vertex, blocks, block_vertices, parent, 0, phi, RootedTree(parent, 0))


# -- SPQR tree ---------------------------------------------------------------

def split_classes(edges: Sequence[Edge], pair: tuple[int, int]) -> list[list[int]]:
    """Group edge indices into the split classes of a vertex pair."""
    a, b = pair
    parent = list(range(len(edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first_at: dict[int, int] = {}
    for i, (_, x, y) in enumerate(edges):
        for z in (x, y):
            if z == a or z == b:
                continue
            j = first_at.setdefault(z, i)
            if j != i:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(edges)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _reindex(edges: Sequence[Edge], skip: int = -1) -> tuple[list[int], list[Edge]]:
    verts = sorted({z for _, x, y in edges for z in (x, y) if z != skip})
    idx = {v: i for i, v in enumerate(verts)}
    local = [(i, idx[x], idx[y]) for i, (_, x, y) in enumerate(edges) if x != skip and y != skip]
    return verts, local


def _articulation_points(edges: Sequence[Edge], skip: int = -1) -> set[int]:
    verts, local = _reindex(edges, skip)
    _, arts = biconnected_components(len(verts), local)
    return {verts[i] for i in arts}


def _separation_pairs(edges: Sequence[Edge]) -> list[tuple[int, int]]:
    verts = sorted({z for _, x, y in edges for z in (x, y)})
    pairs = set()
    # a bundle of parallel edges splits off at its ends even without a vertex cut
    seen: set[tuple[int, int]] = set()
    for _, x, y in edges:
        key = (min(x, y), max(x, y))
        if key in seen:
            pairs.add(key)
        seen.add(key)
    for a in verts:
        for b in _articulation_points(edges, skip=a):
            pairs.add((min(a, b), max(a, b)))
    return sorted(pairs)


@dataclass
class SpqrNode:
    kind: str  # "S", "P" or "R"
    model: list[Edge]
    polar: Edge
    parent: int
    children: list[int] = field(default_factory=list)
    child_label: dict[int, int] = field(default_factory=dict)  # virtual label -> child

    @property
    def poles(self) -> tuple[int, int]:
        return self.polar[1], self.polar[2]

    def vertices(self) -> set[int]:
        return {z for _, x, y in self.model for z in (x, y)}


class SpqrTree:
    def __init__(self, nodes: list[SpqrNode], num_real: int, n: int) -> None:
        self.nodes = nodes
        self.root = 0
        self.num_real = num_real
        self.tree = RootedTree([nd.parent for nd in nodes], 0)
        size = [1] * len(nodes)
        for u in reversed(self.tree.preorder):
            if nodes[u].parent >= 0:
                size[nodes[u].parent] += size[u]
        self.size = size
        # heavy child: largest subtree, ties to the lower child index
        self.heavy = [max(nd.children, key=lambda c: (size[c], -c)) if nd.children else -1 for nd in nodes]
        phi = [-1] * n
        for u in self.tree.preorder:
            for z in nodes[u].vertices():
                if phi[z] == -1:
                    phi[z] = u
        self.phi = phi

    def __len__(self) -> int:
        return len(self.nodes)

    def is_real(self, label: int) -> bool:
        return label < self.num_real


def build_spqr(n: int, edges: Sequence[tuple[int, int]] | Sequence[Edge], *, labels: Sequence[int] | None = None) -> SpqrTree:
    """SPQR tree of a biconnected multigraph; edge ``i`` keeps label ``i``.

    The root's polar edge is the real edge with the lowest label.
    """
    if edges and len(edges[0]) == 3:
        G = [tuple(e) for e in edges]
    else:
        G = [(labels[i] if labels else i, a, b) for i, (a, b) in enumerate(edges)]
    if len(G) < 3:
        raise NotBiconnected("need at least 3 edges")
    if any(a == b for _, a, b in G):
        raise NotBiconnected("self-loop")
    blocks, arts = biconnected_components(n, [(i, a, b) for i, (_, a, b) in enumerate(G)])
    if len(blocks) != 1 or arts:
        raise NotBiconnected("graph is not biconnected")
    num_real = max(lab for lab, _, _ in G) + 1
    next_label = [num_real]

    def fresh() -> int:
        next_label[0] += 1
        return next_label[0] - 1

    nodes: list[SpqrNode] = []
    polar0 = min(G)
    work = [(-1, G, polar0)]
    while work:
        parent, Gu, polar = work.pop()
        uid = len(nodes)
        if parent >= 0:
            nodes[parent].children.append(uid)
            nodes[parent].child_label[polar[0]] = uid
        rest = [e for e in Gu if e != polar]
        p0, p1 = polar[1], polar[2]
        model: list[Edge] = [polar]
        pieces: list[tuple[list[Edge], Edge]] = []

        classes = split_classes(rest, (p0, p1))
        if len(classes) >= 2:
            kind = "P"
            for cls in classes:
                if len(cls) == 1:
                    model.append(rest[cls[0]])
                else:
                    lab = fresh()
                    pieces.append(([rest[i] for i in cls], (lab, p0, p1)))
                    model.append((lab, p0, p1))
        else:
            cuts = _articulation_points(rest)
            if cuts:
                kind = "S"
                for blk, (x, y) in _series_blocks(rest, p0, p1, cuts):
                    if len(blk) == 1:
                        model.append(blk[0])
                    else:
                        lab = fresh()
                        pieces.append((blk, (lab, x, y)))
                        model.append((lab, x, y))
            else:
                kind = "R"
                model, pieces = _rigid_split(Gu, polar, fresh)
        nodes.append(SpqrNode(kind, model, polar, parent))
        for piece, vpolar in pieces:
            work.append((uid, piece + [vpolar], vpolar))
    return SpqrTree(nodes, num_real, n)


def _series_blocks(rest: list[Edge], p0: int, p1: int, cuts: set[int]) -> list[tuple[list[Edge], tuple[int, int]]]:
    """Blocks of a chain from ``p0`` to ``p1``, each with its two attachment vertices."""
    verts, local = _reindex(rest)
    blocks, _ = biconnected_components(len(verts), local)
    bverts = []
    for blk in blocks:
        bverts.append({verts[local[i][1]] for i in blk} | {verts[local[i][2]] for i in blk})
    by_vertex: dict[int, list[int]] = {}
    for b, vs in enumerate(bverts):
        for v in vs:
            by_vertex.setdefault(v, []).append(b)
    out = []
    used = set()
    at = p0
    while at != p1:
        b = next(b for b in by_vertex[at] if b not in used)
        used.add(b)
        exits = [v for v in bverts[b] if v != at and (v in cuts or v == p1)]
        assert len(exits) == 1, "blocks do not form a chain"
        out.append(([rest[local[i][0]] for i in blocks[b]], (at, exits[0])))
        at = exits[0]
    assert len(used) == len(blocks)
    return out


def _rigid_split(Gu: list[Edge], polar: Edge, fresh) -> tuple[list[Edge], list[tuple[list[Edge], Edge]]]:
    pidx = Gu.index(polar)
    candidates = []
    for pair in _separation_pairs(Gu):
        classes = split_classes(Gu, pair)
        if len(classes) < 2 or (len(classes) == 2 and min(len(c) for c in classes) == 1):
            continue
        outer = frozenset(i for c in classes if pidx not in c for i in c)
        candidates.append((len(outer), pair, outer))
    candidates.sort(key=lambda t: (-t[0], t[1]))
    covered: set[int] = set()
    chosen = []
    for _, pair, outer in candidates:
        hit = outer & covered
        if hit:
            assert hit == outer, "split pieces overlap without nesting"
            continue
        covered |= outer
        chosen.append((pair, outer))
    model = [e for i, e in enumerate(Gu) if i not in covered]
    pieces = []
    for (a, b), outer in chosen:
        lab = fresh()
        model.append((lab, a, b))
        pieces.append(([Gu[i] for i in sorted(outer)], (lab, a, b)))
    return model, pieces


def merge_check(t: SpqrTree) -> list[Edge]:
    """Merge all model graphs along their virtual edges; returns the real edges."""
    seen_labels: dict[int, int] = {}
    for u, nd in enumerate(t.nodes):
        for lab, _, _ in nd.model:
            if not t.is_real(lab):
                seen_labels[lab] = seen_labels.get(lab, 0) + 1
    for u, nd in enumerate(t.nodes):
        if nd.parent >= 0:
            lab = nd.polar[0]
            if seen_labels.get(lab) != 2 or t.nodes[nd.parent].child_label.get(lab) != u:
                raise LabelMismatch(f"virtual label {lab} does not pair node {u} with its parent")
    if any(c != 2 for c in seen_labels.values()):
        raise LabelMismatch("a virtual label appears an odd number of times")
    merged: list[Edge] = []
    stack = [t.root]
    while stack:
        u = stack.pop()
        nd = t.nodes[u]
        for e in nd.model:
            if u != t.root and e == nd.polar:
                continue
            if e[0] in nd.child_label:
                stack.append(nd.child_label[e[0]])
            else:
                if not t.is_real(e[0]):
                    raise LabelMismatch(f"virtual label {e[0]} has no child")
                merged.append(e)
    return merged


def same_kind_neighbours(t: SpqrTree) -> list[tuple[int, int]]:
    """Parent-child pairs that are both P-nodes or both S-nodes."""
    out = []
    for u, nd in enumerate(t.nodes):
        for c in nd.children:
            if t.nodes[c].kind == nd.kind and nd.kind in "PS":
                out.append((u, c))
    return out
