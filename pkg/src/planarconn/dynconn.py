"""Fully dynamic connectivity with polylogarithmic amortized updates.

Edges carry levels; each level keeps a spanning forest of the edges at or
above it as Euler tour sequences stored in treaps.  Deleting a tree edge
searches for a replacement from the top level down, pushing the smaller
side's edges one level up so each edge is examined O(log n) times overall.
"""

from __future__ import annotations

import random


class _Node:
    __slots__ = ("l", "r", "p", "pri", "sz", "cnt", "vert", "eid", "own_t", "own_n", "agg_t", "agg_n")

    def __init__(self, pri: float, vert: int, eid: int = -1) -> None:
        self.l = self.r = self.p = None
        self.pri = pri
        self.sz = 1
        self.vert = vert
        self.eid = eid
        self.cnt = 1 if vert >= 0 else 0
        self.own_t = self.own_n = self.agg_t = self.agg_n = False


def _pull(x: _Node) -> None:
    sz, cnt = 1, 1 if x.vert >= 0 else 0
    at, an = x.own_t, x.own_n
    l, r = x.l, x.r
    if l is not None:
        sz += l.sz
        cnt += l.cnt
        at = at or l.agg_t
        an = an or l.agg_n
    if r is not None:
        sz += r.sz
        cnt += r.cnt
        at = at or r.agg_t
        an = an or r.agg_n
    x.sz, x.cnt, x.agg_t, x.agg_n = sz, cnt, at, an


def _merge(a: _Node | None, b: _Node | None) -> _Node | None:
    if a is None:
        return b
    if b is None:
        return a
    if a.pri > b.pri:
        m = _merge(a.r, b)
        a.r = m
        m.p = a
        _pull(a)
        return a
    m = _merge(a, b.l)
    b.l = m
    m.p = b
    _pull(b)
    return b


def _split(t: _Node | None, k: int) -> tuple[_Node | None, _Node | None]:
    """First ``k`` nodes of ``t`` and the rest; both roots get no parent."""
    if t is None:
        return None, None
    lsz = t.l.sz if t.l is not None else 0
    if k <= lsz:
        a, b = _split(t.l, k)
        t.l = b
        if b is not None:
            b.p = t
        _pull(t)
        t.p = None
        if a is not None:
            a.p = None
        return a, t
    a, b = _split(t.r, k - lsz - 1)
    t.r = a
    if a is not None:
        a.p = t
    _pull(t)
    t.p = None
    if b is not None:
        b.p = None
    return t, b


def _root(x: _Node) -> _Node:
    while x.p is not None:
        x = x.p
    return x


def _index(x: _Node) -> int:
    i = x.l.sz if x.l is not None else 0
    while x.p is not None:
        p = x.p
        if x is p.r:
            i += 1 + (p.l.sz if p.l is not None else 0)
        x = p
    return i


def _repull_up(x: _Node) -> None:
    while x is not None:
        _pull(x)
        x = x.p


def _find_flagged(t: _Node, tree_flag: bool) -> _Node | None:
    attr_own = "own_t" if tree_flag else "own_n"
    attr_agg = "agg_t" if tree_flag else "agg_n"
    if not getattr(t, attr_agg):
        return None
    x = t
    while True:
        if getattr(x, attr_own):
            return x
        if x.l is not None and getattr(x.l, attr_agg):
            x = x.l
        else:
            x = x.r


def _build(seq: list[_Node]) -> _Node | None:
    """Treap over ``seq`` in order, built in linear time with a stack."""
    stack: list[_Node] = []
    for x in seq:
        last = None
        while stack and stack[-1].pri < x.pri:
            last = stack.pop()
            _pull(last)
        x.l = last
        if last is not None:
            last.p = x
        if stack:
            stack[-1].r = x
            x.p = stack[-1]
        stack.append(x)
    while stack:
        _pull(stack.pop())
    if not seq:
        return None
    return _root(seq[0])


class _Forest:
    """Euler tour forest for one level."""

    def __init__(self, rng: random.Random) -> None:
        self.rng = rng
        self.vnode: dict[int, _Node] = {}
        self.arcs: dict[int, tuple[_Node, _Node]] = {}

    def vertex(self, v: int) -> _Node:
        x = self.vnode.get(v)
        if x is None:
            x = self.vnode[v] = _Node(self.rng.random(), v)
        return x

    def _reroot(self, x: _Node) -> _Node:
        t = _root(x)
        a, b = _split(t, _index(x))
        return _merge(b, a)

    def link(self, eid: int, u: int, v: int) -> _Node:
        tu = self._reroot(self.vertex(u))
        tv = self._reroot(self.vertex(v))
        a1 = _Node(self.rng.random(), -1, eid)
        a2 = _Node(self.rng.random(), -1, eid)
        self.arcs[eid] = (a1, a2)
        _merge(_merge(_merge(tu, a1), tv), a2)
        return a1

    def cut(self, eid: int) -> None:
        a1, a2 = self.arcs.pop(eid)
        t = _root(a1)
        i1, i2 = _index(a1), _index(a2)
        if i1 > i2:
            i1, i2 = i2, i1
        x, rest = _split(t, i1)
        _, rest = _split(rest, 1)
        _y, rest = _split(rest, i2 - i1 - 1)
        _, z = _split(rest, 1)
        _merge(x, z)

    def root(self, v: int) -> _Node:
        return _root(self.vertex(v))


class DynamicConnectivity:
    """Undirected multigraph on vertices ``0 .. n-1`` with edges keyed by caller ids."""

    def __init__(self, n: int, *, seed: int = 0) -> None:
        self.n = n
        self.levels = max(1, n.bit_length())
        rng = random.Random(seed)
        self.forest = [_Forest(rng) for _ in range(self.levels + 1)]
        self.nontree: list[dict[int, set[int]]] = [dict() for _ in range(self.levels + 1)]
        self.ends: dict[int, tuple[int, int]] = {}
        self.level: dict[int, int] = {}
        self.is_tree: dict[int, bool] = {}
        self.ops = 0

    def __contains__(self, eid: int) -> bool:
        return eid in self.ends

    def __len__(self) -> int:
        return len(self.ends)

    def load_forest(self, edges: list[tuple[int, int, int]]) -> None:
        """Insert ``(eid, u, v)`` edges forming a forest into an empty structure."""
        if self.ends:
            raise ValueError("load_forest needs an empty structure")
        adj: dict[int, list[tuple[int, int]]] = {}
        for eid, u, v in edges:
            self.ends[eid] = (u, v)
            self.level[eid] = 0
            self.is_tree[eid] = True
            adj.setdefault(u, []).append((v, eid))
            adj.setdefault(v, []).append((u, eid))
        f = self.forest[0]
        seen: set[int] = set()
        for start in adj:
            if start in seen:
                continue
            seen.add(start)
            seq = [f.vertex(start)]
            stack = [(start, -1, iter(adj[start]))]
            while stack:
                v, via, it = stack[-1]
                for w, eid in it:
                    if eid == via:
                        continue
                    if w in seen:
                        raise ValueError("edges do not form a forest")
                    seen.add(w)
                    a1 = _Node(f.rng.random(), -1, eid)
                    a2 = _Node(f.rng.random(), -1, eid)
                    a1.own_t = True
                    f.arcs[eid] = (a1, a2)
                    seq.append(a1)
                    seq.append(f.vertex(w))
                    stack.append((w, eid, iter(adj[w])))
                    break
                else:
                    stack.pop()
                    if via >= 0:
                        seq.append(f.arcs[via][1])
            _build(seq)

    def connected(self, u: int, v: int) -> bool:
        if u == v:
            return True
        f = self.forest[0]
        return f.root(u) is f.root(v)

    # -- bookkeeping for the level flags -----------------------------------
    def _set_nontree_flag(self, i: int, v: int) -> None:
        x = self.forest[i].vertex(v)
        want = bool(self.nontree[i].get(v))
        if x.own_n != want:
            x.own_n = want
            _repull_up(x)

    def _add_nontree(self, i: int, eid: int) -> None:
        for v in self.ends[eid]:
            self.nontree[i].setdefault(v, set()).add(eid)
            self._set_nontree_flag(i, v)

    def _remove_nontree(self, i: int, eid: int) -> None:
        for v in self.ends[eid]:
            self.nontree[i][v].discard(eid)
            self._set_nontree_flag(i, v)

    def _link_tree(self, eid: int, top: int) -> None:
        u, v = self.ends[eid]
        for i in range(top + 1):
            a1 = self.forest[i].link(eid, u, v)
            if i == top:
                a1.own_t = True
                _repull_up(a1)

    # -- updates -------------------------------------------------------------
    def insert_edge(self, eid: int, u: int, v: int) -> None:
        if eid in self.ends:
            raise KeyError(f"edge {eid} already present")
        self.ops += 1
        self.ends[eid] = (u, v)
        self.level[eid] = 0
        if u != v and not self.connected(u, v):
            self.is_tree[eid] = True
            self._link_tree(eid, 0)
        else:
            self.is_tree[eid] = False
            self._add_nontree(0, eid)

    def delete_edge(self, eid: int) -> None:
        self.ops += 1
        lvl = self.level.pop(eid)
        tree = self.is_tree.pop(eid)
        if not tree:
            self._remove_nontree(lvl, eid)
            del self.ends[eid]
            return
        u, v = self.ends.pop(eid)
        for i in range(lvl + 1):
            self.forest[i].cut(eid)
        for i in range(lvl, -1, -1):
            if self._replace(i, u, v):
                return

    def _replace(self, i: int, u: int, v: int) -> bool:
        f = self.forest[i]
        ru, rv = f.root(u), f.root(v)
        small = ru if ru.cnt <= rv.cnt else rv
        if not small.agg_n:
            # nothing to scan, and leaving edges low never breaks the size bound
            return False
        # push the smaller side's level-i tree edges up a level
        while True:
            x = _find_flagged(small, True)
            if x is None:
                break
            eid = x.eid
            x.own_t = False
            _repull_up(x)
            self.level[eid] = i + 1
            a, b = self.ends[eid]
            a1 = self.forest[i + 1].link(eid, a, b)
            a1.own_t = True
            _repull_up(a1)
            small = _root(small)
        while True:
            small = _root(small)
            x = _find_flagged(small, False)
            if x is None:
                return False
            w = x.vert
            for eid in list(self.nontree[i][w]):
                a, b = self.ends[eid]
                y = b if a == w else a
                if f.root(y) is not small:
                    self._remove_nontree(i, eid)
                    self.is_tree[eid] = True
                    self._link_tree(eid, i)
                    return True
                self._remove_nontree(i, eid)
                self.level[eid] = i + 1
                self._add_nontree(i + 1, eid)

