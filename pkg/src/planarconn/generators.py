"""Seeded plane-graph generators.

Every generator is deterministic in ``(model, n, seed)``.
"""

from __future__ import annotations

import math
import random

from .errors import BadParams
from .planar_core import RotationGraph, from_neighbor_rotations, restrict

MODELS = ("cycle", "wheel", "grid", "cube", "triangulation", "planar-general")


def _from_coords(n: int, edges: list[tuple[int, int]], xy: list[tuple[float, float]]) -> RotationGraph:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rot = []
    for v in range(n):
        x0, y0 = xy[v]
        rot.append(sorted(nbrs[v], key=lambda w: math.atan2(xy[w][1] - y0, xy[w][0] - x0)))
    return from_neighbor_rotations(n, rot)


def cycle(n: int) -> RotationGraph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    xy = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]
    return _from_coords(n, [(i, (i + 1) % n) for i in range(n)], xy)


def wheel(n: int) -> RotationGraph:
    """Hub 0 joined to a rim cycle on ``1 .. n-1``."""
    if n < 4:
        raise BadParams("wheel needs n >= 4")
    k = n - 1
    xy = [(0.0, 0.0)] + [
        (math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)
    ]
    edges = [(0, i) for i in range(1, n)] + [(i, i % k + 1) for i in range(1, n)]
    return _from_coords(n, edges, xy)


def grid(n: int) -> RotationGraph:
    """An ``r x c`` grid with ``r = isqrt(n)``, ``c = n // r`` (so ``r*c <= n``)."""
    if n < 4:
        raise BadParams("grid needs n >= 4")
    r = math.isqrt(n)
    c = n // r
    edges = []
    xy = []
    for i in range(r):
        for j in range(c):
            xy.append((float(j), float(i)))
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return _from_coords(r * c, edges, xy)


def cube() -> RotationGraph:
    xy = [(-2, -2), (2, -2), (2, 2), (-2, 2), (-1, -1), (1, -1), (1, 1), (-1, 1)]
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7)]
    return _from_coords(8, edges, [(float(a), float(b)) for a, b in xy])


def octahedron() -> RotationGraph:
    xy = [(0, 3), (-3, -2), (3, -2), (0, -1), (1, 0.5), (-1, 0.5)]
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
             (0, 4), (0, 5), (1, 5), (1, 3), (2, 3), (2, 4)]
    return _from_coords(6, edges, [(float(a), float(b)) for a, b in xy])


def complete4() -> RotationGraph:
    xy = [(0.0, 0.0), (0.0, 3.0), (-3.0, -2.0), (3.0, -2.0)]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]
    return _from_coords(4, edges, xy)


def triangulation(n: int, rng: random.Random) -> RotationGraph:
    """Random maximal plane graph: insert each new vertex into a uniform face."""
    if n < 3:
        raise BadParams("triangulation needs n >= 3")
    tris = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        i = rng.randrange(len(tris))
        a, b, c = tris[i]
        tris[i] = (a, b, v)
        tris.append((b, c, v))
        tris.append((c, a, v))
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for a, b, c in tris:
        # ccw triangle (a, b, c): around a, b is followed by c
        succ[a][b] = c
        succ[b][c] = a
        succ[c][a] = b
    rot = []
    for v in range(n):
        s = succ[v]
        start = min(s)
        order = [start]
        w = s[start]
        while w != start:
            order.append(w)
            w = s[w]
        rot.append(order)
    return from_neighbor_rotations(n, rot)


def planar_general(n: int, rng: random.Random, keep: float | None = None) -> RotationGraph:
    """A triangulation with random edge deletions that keep it connected."""
    g = triangulation(n, rng)
    keep = rng.uniform(0.35, 0.9) if keep is None else keep
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    order = list(range(g.m))
    rng.shuffle(order)
    kept = []
    for e in order:
        a, b = g.endpoints[e]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            kept.append(e)
    kept_set = set(kept)
    extra = [e for e in order if e not in kept_set]
    target = int(keep * g.m) - len(kept)
    kept.extend(extra[: max(0, target)])
    kept.sort()
    return restrict(g, kept)


def nested_biconnected(n: int, rng: random.Random) -> RotationGraph:
    """Biconnected plane graph grown by series, parallel and K4 substitutions.

    Starting from a triangle, a random edge ``ab`` is repeatedly subdivided,
    bridged by a new path ``a-c-b``, or capped with two new vertices forming
    a K4 on ``a, b, c, d``.  This gives deep SPQR trees with every node kind.
    """
    from .planar_core import embed_simple

    if n < 3:
        raise BadParams("nested-biconnected needs n >= 3")
    edges = [(0, 1), (1, 2), (2, 0)]
    k = 3
    while k < n:
        i = rng.randrange(len(edges))
        a, b = edges[i]
        op = rng.random()
        if op < 0.35:
            edges[i] = (a, k)
            edges.append((k, b))
            k += 1
        elif op < 0.7 or k + 2 > n:
            edges += [(a, k), (k, b)]
            k += 1
        else:
            c, d = k, k + 1
            edges += [(a, c), (c, b), (a, d), (d, b), (c, d)]
            k += 2
    return embed_simple(n, edges)


def gen(model: str, n: int, seed: int) -> RotationGraph:
    rng = random.Random(f"{model}:{n}:{seed}")
    if model == "cycle":
        return cycle(n)
    if model == "wheel":
        return wheel(n)
    if model == "grid":
        return grid(n)
    if model == "cube":
        if n != 8:
            raise BadParams("cube has exactly 8 vertices")
        return cube()
    if model == "triangulation":
        return triangulation(n, rng)
    if model == "planar-general":
        if n < 3:
            raise BadParams("planar-general needs n >= 3")
        return planar_general(n, rng)
    raise BadParams(f"unknown model {model!r}")
