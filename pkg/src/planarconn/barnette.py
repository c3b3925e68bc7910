"""Spanning trees of maximum degree three in triconnected plane graphs.

Triangulations go through a canonical ordering.  The tree always contains
the current outer contour as a path, and each new vertex is spliced into
that path so no existing vertex changes degree.  Other inputs start from a
DFS tree and are repaired by edge swaps that lower the total excess degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import NotTriconnected
from .planar_core import RotationGraph

# full triconnectivity check is O(n m); above this size only cheap checks run
FULL_CHECK_LIMIT = 300


@dataclass
class DegreeThreeTree:
    parent: list[int]
    degree: list[int]
    root: int
    edges: list[int] = field(default_factory=list)

    @property
    def max_degree(self) -> int:
        return max(self.degree, default=0)


def _simple_adjacency(g: RotationGraph) -> list[set[int]]:
    adj = [set() for _ in range(g.n)]
    for a, b in g.endpoints:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return adj


def _is_biconnected_without(adj: list[set[int]], n: int, removed: int) -> bool:
    """Is the graph minus ``removed`` connected with no articulation point."""
    start = 0 if removed != 0 else 1
    disc = [-1] * n
    low = [0] * n
    disc[removed] = -2
    disc[start] = 0
    low[start] = 0
    clock = 1
    root_children = 0
    stack = [(start, -1, iter(adj[start]))]
    while stack:
        v, p, it = stack[-1]
        advanced = False
        for w in it:
            if w == removed or w == p:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = clock
                clock += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if p == -1:
            continue
        low[p] = min(low[p], low[v])
        if p == start:
            root_children += 1
        elif low[v] >= disc[p]:
            return False
    return clock == n - 1 and root_children <= 1


def is_triconnected(g: RotationGraph) -> bool:
    """Connected, at least 4 vertices, and no one or two vertices disconnect it."""
    n = g.n
    if n < 4:
        return False
    adj = _simple_adjacency(g)
    return all(_is_biconnected_without(adj, n, v) for v in range(n))


def _is_triangulation(g: RotationGraph) -> bool:
    if g.n < 3 or g.m != 3 * g.n - 6:
        return False
    if len({frozenset(e) for e in g.endpoints}) != g.m or any(a == b for a, b in g.endpoints):
        return False
    return all(len(w) == 3 for w in g.faces().walks)


def _canonical_tree(g: RotationGraph) -> list[set[int]]:
    n = g.n
    tail, rotations = g.tail, g.rotations
    nbrs = [[tail[d ^ 1] for d in rot] for rot in rotations]
    d0, d1, d2 = g.faces().walks[g.faces().face_of[0]]
    v1, top, v2 = tail[d0], tail[d1], tail[d2]

    prev = [-1] * n
    nxt = [-1] * n
    on = [False] * n
    gone = [False] * n
    chords = [0] * n
    for x in (v1, top, v2):
        on[x] = True
    nxt[v1], prev[top], nxt[top], prev[v2] = top, v1, v2, top
    # the outer triangle has no chords

    steps: list[tuple[int, int, int, list[int]]] = []
    cand = [top]
    for _ in range(n - 2):
        while True:
            v = cand.pop()
            if on[v] and not gone[v] and chords[v] == 0 and v != v1 and v != v2:
                break
        wl, wr = prev[v], nxt[v]
        # interior neighbours run ccw from wr to wl
        nb = nbrs[v]
        i = nb.index(wr)
        k = len(nb)
        inner = []
        j = (i + 1) % k
        while nb[j] != wl:
            inner.append(nb[j])
            j = (j + 1) % k
        inner.reverse()
        gone[v] = True
        on[v] = False
        steps.append((v, wl, wr, inner))
        if not inner:
            # wl-wr was a chord and is now a contour edge
            chords[wl] -= 1
            chords[wr] -= 1
            nxt[wl], prev[wr] = wr, wl
            cand.extend((wl, wr))
            continue
        seq = [wl, *inner, wr]
        for a, b in zip(seq, seq[1:]):
            nxt[a], prev[b] = b, a
        new = set(inner)
        for x in inner:
            on[x] = True
        for x in inner:
            for y in nbrs[x]:
                if on[y] and y != prev[x] and y != nxt[x]:
                    if y in new and y < x:
                        # chord between two new vertices, counted from the smaller end
                        continue
                    chords[x] += 1
                    chords[y] += 1
        cand.extend(inner)
        cand.extend((wl, wr))

    tree = [set() for _ in range(n)]

    def link(a: int, b: int) -> None:
        tree[a].add(b)
        tree[b].add(a)

    def cut(a: int, b: int) -> None:
        tree[a].discard(b)
        tree[b].discard(a)

    link(v1, v2)
    for v, wl, wr, inner in reversed(steps):
        if not inner:
            cut(wl, wr)
            link(wl, v)
            link(v, wr)
        else:
            cut(wl, inner[0])
            cut(inner[-1], wr)
            link(wl, v)
            link(v, wr)
            link(v, inner[0])
    return tree


def _dfs_tree(adj: list[list[int]], root: int, rng: random.Random | None) -> list[set[int]]:
    n = len(adj)
    tree = [set() for _ in range(n)]
    seen = [False] * n
    seen[root] = True
    order = [list(a) for a in adj]
    if rng is not None:
        for a in order:
            rng.shuffle(a)
    stack = [(root, iter(order[root]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if not seen[w]:
                seen[w] = True
                tree[v].add(w)
                tree[w].add(v)
                stack.append((w, iter(order[w])))
                break
        else:
            stack.pop()
    return tree


def _side_labels(tree: list[set[int]], v: int) -> list[int]:
    """Label every vertex by the neighbour of ``v`` whose subtree holds it."""
    lab = [-1] * len(tree)
    lab[v] = v
    for c in tree[v]:
        lab[c] = c
        stack = [c]
        while stack:
            x = stack.pop()
            for y in tree[x]:
                if lab[y] == -1:
                    lab[y] = c
                    stack.append(y)
    return lab


def _repair(adj: list[list[int]], tree: list[set[int]], rng: random.Random, max_rounds: int) -> bool:
    """Swap edges until every tree degree is at most 3.  False when stuck.

    A move adds a non-tree edge ``xy`` whose ends lie in different subtrees of
    an overfull vertex ``v`` and cuts the tree edge from ``v`` into one of
    them.  Moves that push the excess onto ``x`` or ``y`` are taken only when
    nothing strictly better exists.
    """
    n = len(adj)
    edges = [(a, b) for a in range(n) for b in adj[a] if a < b]
    for _ in range(max_rounds):
        bad = [v for v in range(n) if len(tree[v]) > 3]
        if not bad:
            return True
        v = rng.choice(bad)
        lab = _side_labels(tree, v)
        rng.shuffle(edges)
        better = sideways = None
        for x, y in edges:
            if x == v or y == v or lab[x] == lab[y] or y in tree[x]:
                continue
            for cx in (lab[x], lab[y]):
                worst = max(len(tree[x]) + (x != cx), len(tree[y]) + (y != cx))
                if worst <= 3:
                    better = (x, y, cx)
                    break
                if worst == 4 and sideways is None:
                    sideways = (x, y, cx)
            if better:
                break
        move = better or sideways
        if move is None:
            return False
        x, y, cx = move
        tree[v].discard(cx)
        tree[cx].discard(v)
        tree[x].add(y)
        tree[y].add(x)
    return False


def _audit(g: RotationGraph, adj_sets: list[set[int]], tree: list[set[int]]) -> None:
    n = g.n
    count = sum(len(t) for t in tree) // 2
    if count != n - 1:
        raise AssertionError("tree has the wrong number of edges")
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in tree[x]:
            if y not in adj_sets[x]:
                raise AssertionError("tree uses a non-edge")
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != n:
        raise AssertionError("tree does not span")
    if any(len(t) > 3 for t in tree):
        raise AssertionError("tree degree exceeds 3")


def _quick_reject(g: RotationGraph, adj: list[set[int]]) -> bool:
    return g.n < 4 or min(len(a) for a in adj) < 3


def barnette_tree(g: RotationGraph, *, seed: int = 0) -> DegreeThreeTree:
    adj_sets = _simple_adjacency(g)
    if _quick_reject(g, adj_sets):
        raise NotTriconnected("fewer than 4 vertices or a vertex of degree < 3")
    if g.n <= FULL_CHECK_LIMIT and not is_triconnected(g):
        raise NotTriconnected("graph has a separating set of at most two vertices")
    if _is_triangulation(g):
        tree = _canonical_tree(g)
    else:
        adj = [sorted(a) for a in adj_sets]
        rng = random.Random(seed)
        tree = _dfs_tree(adj, 0, None)
        attempts = 0
        while not _repair(adj, tree, rng, 20 * g.n + 100):
            attempts += 1
            if attempts > 50:
                raise NotTriconnected("no degree-3 spanning tree found")
            tree = _dfs_tree(adj, rng.randrange(g.n), rng)
    _audit(g, adj_sets, tree)

    degree = [len(t) for t in tree]
    root = next((v for v in range(g.n) if degree[v] <= 2), 0)
    edge_id = {}
    for i, (a, b) in enumerate(g.endpoints):
        edge_id.setdefault((a, b), i)
        edge_id.setdefault((b, a), i)
    parent = [-1] * g.n
    edges = []
    seen = [False] * g.n
    seen[root] = True
    stack = [root]
    while stack:
        x = stack.pop()
        for y in sorted(tree[x]):
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                edges.append(edge_id[(x, y)])
                stack.append(y)
    return DegreeThreeTree(parent, degree, root, sorted(edges))
