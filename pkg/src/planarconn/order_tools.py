"""Predecessor search and first/last marked vertex on tree paths.

Predecessor sets are sorted arrays with binary search, so queries cost
``O(log d)`` and builds ``O(d log d)``.
"""

from __future__ import annotations

from bisect import bisect_right
from typing import Any, Iterable, Sequence

from .planar_core import RootedTree


class PredecessorSet:
    """Sorted integer keys with optional payloads."""

    __slots__ = ("keys", "payload")

    def __init__(self, items: Iterable[int] | Iterable[tuple[int, Any]] = (), *, sorted_input: bool = False):
        items = list(items)
        if items and isinstance(items[0], tuple):
            if not sorted_input:
                items.sort(key=lambda kv: kv[0])
            self.keys = [k for k, _ in items]
            self.payload = [p for _, p in items]
        else:
            self.keys = items if sorted_input else sorted(items)
            self.payload = None

    def __len__(self) -> int:
        return len(self.keys)

    def pred_index(self, q: int) -> int:
        """Index of the largest key ``<= q``, or ``-1``."""
        return bisect_right(self.keys, q) - 1

    def predecessor(self, q: int) -> int | None:
        i = bisect_right(self.keys, q) - 1
        return self.keys[i] if i >= 0 else None

    def pred_payload(self, q: int) -> Any:
        i = bisect_right(self.keys, q) - 1
        return self.payload[i] if i >= 0 else None


class MarkedAncestorIndex:
    """Nearest marked ancestor and first/last marked vertex on a tree path.

    The root is treated as marked for bookkeeping; it is reported only when
    it is really in ``M``.
    """

    def __init__(self, tree: RootedTree, marked: Iterable[int]) -> None:
        self.tree = tree
        self.marked = set(marked)
        root = tree.root
        pre, post = tree.pre, tree.post
        nodes = self.marked | {root}
        events = []
        for x in nodes:
            events.append((pre[x], x, 0))
            events.append((post[x], x, 1))
        events.sort()
        mu: dict[int, int] = {}
        children: dict[int, list[int]] = {x: [] for x in nodes}
        stack: list[int] = []
        for _, x, kind in events:
            if kind == 0:
                if stack:
                    mu[x] = stack[-1]
                    children[stack[-1]].append(pre[x])
                stack.append(x)
            else:
                stack.pop()
        self.mu = mu
        self.global_set = PredecessorSet([(t, (x, k)) for t, x, k in events], sorted_input=True)
        self.local = {x: PredecessorSet(v, sorted_input=True) for x, v in children.items()}
        self._by_pre = {pre[x]: x for x in nodes}

    def _nearest(self, u: int) -> int:
        """Nearest ancestor of ``u`` (inclusive) among ``M`` plus the root."""
        x, kind = self.global_set.pred_payload(self.tree.pre[u])
        return x if kind == 0 else self.mu[x]

    def nearest_marked_ancestor(self, u: int) -> int | None:
        x = self._nearest(u)
        return x if x in self.marked else None

    def _last_below(self, x: int, w: int) -> int | None:
        """Marked vertex on the ``x``-to-``w`` path closest to ``w``; ``w`` ancestral to ``x``."""
        t = self.tree
        a = self._nearest(x)
        if a not in self.marked or t.depth[a] < t.depth[w]:
            return None
        if w in self.marked:
            return w
        top = self._nearest(w)
        y_pre = self.local[top].predecessor(t.pre[x])
        return self._by_pre[y_pre]

    def path_marks(self, u: int, v: int) -> tuple[int, int] | None:
        """First and last marked vertices on the ``u``-``v`` path, or None."""
        t = self.tree
        w = t.lca(u, v)
        dw = t.depth[w]
        a = self._nearest(u)
        if a in self.marked and t.depth[a] >= dw:
            first = a
        else:
            first = self._last_below(v, w)
        if first is None:
            return None
        b = self._nearest(v)
        if b in self.marked and t.depth[b] >= dw:
            last = b
        else:
            last = self._last_below(u, w)
        return first, last


def build_marked(tree: RootedTree, marked: Iterable[int]) -> MarkedAncestorIndex:
    return MarkedAncestorIndex(tree, marked)


def nearest_marked_ancestor(ma: MarkedAncestorIndex, u: int) -> int | None:
    return ma.nearest_marked_ancestor(u)


def path_marks(ma: MarkedAncestorIndex, u: int, v: int) -> tuple[int, int] | None:
    return ma.path_marks(u, v)


def cyclic_pred_index(keys: Sequence[int], q: int) -> int:
    """Index of the cyclic predecessor of ``q`` in a non-empty sorted list."""
    i = bisect_right(keys, q) - 1
    return i if i >= 0 else len(keys) - 1
