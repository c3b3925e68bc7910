"""Definitional ground truth: BFS in ``G`` minus the failed elements."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .planar_core import RotationGraph


def split_failures(g: RotationGraph, F: Iterable) -> tuple[set[int], set[int]]:
    """Split a mixed failure set into (vertices, edges).

    Items are ``('v', x)`` / ``('e', x)`` pairs.
    """
    fv: set[int] = set()
    fe: set[int] = set()
    for kind, x in F:
        (fv if kind == "v" else fe).add(x)
    return fv, fe


def brute_connected(
    g: RotationGraph,
    failed_vertices: Iterable[int],
    failed_edges: Iterable[int],
    u: int,
    v: int,
) -> bool:
    fv = set(failed_vertices)
    fe = set(failed_edges)
    if u in fv or v in fv:
        return False
    if u == v:
        return True
    seen = {u}
    q = deque([u])
    rot = g.rotations
    tail = g.tail
    while q:
        x = q.popleft()
        for d in rot[x]:
            if (d >> 1) in fe:
                continue
            y = tail[d ^ 1]
            if y in fv or y in seen:
                continue
            if y == v:
                return True
            seen.add(y)
            q.append(y)
    return False


def brute_components(
    g: RotationGraph, failed_vertices: Iterable[int], failed_edges: Iterable[int]
) -> list[int]:
    """Component label per vertex of ``G`` minus failures; ``-1`` for failed."""
    fv = set(failed_vertices)
    fe = set(failed_edges)
    label = [-1] * g.n
    rot = g.rotations
    tail = g.tail
    c = 0
    for s in range(g.n):
        if s in fv or label[s] >= 0:
            continue
        label[s] = c
        stack = [s]
        while stack:
            x = stack.pop()
            for d in rot[x]:
                if (d >> 1) in fe:
                    continue
                y = tail[d ^ 1]
                if label[y] < 0 and y not in fv:
                    label[y] = c
                    stack.append(y)
        c += 1
    return label


class BruteForceOracle:
    """Recomputes a BFS per query; no caching."""

    def __init__(self, g: RotationGraph) -> None:
        self.g = g
        self.failed_vertices: set[int] = set()
        self.failed_edges: set[int] = set()

    def update(self, vertices: Iterable[int] = (), edges: Iterable[int] = ()) -> None:
        self.failed_vertices = set(vertices)
        self.failed_edges = set(edges)

    def fail_vertex(self, v: int) -> None:
        self.failed_vertices.add(v)

    def fail_edge(self, e: int) -> None:
        self.failed_edges.add(e)

    def connected(self, u: int, v: int) -> bool:
        return brute_connected(self.g, self.failed_vertices, self.failed_edges, u, v)
