import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarconn.dynconn import DynamicConnectivity, _root


def components(n, edges):
    p = list(range(n))

    def f(x):
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    for a, b in edges.values():
        p[f(a)] = f(b)
    return [f(x) for x in range(n)]


def check_levels(dc):
    for i, forest in enumerate(dc.forest):
        for node in forest.vnode.values():
            assert _root(node).cnt <= max(1, dc.n >> i)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 12), st.lists(st.tuples(st.booleans(), st.integers(0, 11), st.integers(0, 11)), max_size=80))
def test_matches_union_find(n, ops):
    dc = DynamicConnectivity(n)
    edges = {}
    nid = 0
    for delete, a, b in ops:
        if delete and edges:
            e = sorted(edges)[(a * 7 + b) % len(edges)]
            del edges[e]
            dc.delete_edge(e)
        else:
            edges[nid] = (a % n, b % n)
            dc.insert_edge(nid, a % n, b % n)
            nid += 1
        comp = components(n, edges)
        for u in range(n):
            for v in range(n):
                assert dc.connected(u, v) == (comp[u] == comp[v])
    check_levels(dc)


@pytest.mark.parametrize("seed", range(8))
def test_random_scripts_keep_level_bounds(seed):
    rng = random.Random(seed)
    n = rng.randrange(20, 200)
    dc = DynamicConnectivity(n, seed=seed)
    edges = {}
    for nid in range(4 * n):
        a, b = rng.randrange(n), rng.randrange(n)
        edges[nid] = (a, b)
        dc.insert_edge(nid, a, b)
    for e in rng.sample(sorted(edges), len(edges)):
        del edges[e]
        dc.delete_edge(e)
        if rng.random() < 0.05:
            comp = components(n, edges)
            for _ in range(50):
                u, v = rng.randrange(n), rng.randrange(n)
                assert dc.connected(u, v) == (comp[u] == comp[v])
            check_levels(dc)
    assert len(dc) == 0


def test_load_forest_then_mutate():
    n = 50
    rng = random.Random(1)
    tree = [(i - 1, rng.randrange(i), i) for i in range(1, n)]
    dc = DynamicConnectivity(n)
    dc.load_forest(tree)
    edges = {e: (a, b) for e, a, b in tree}
    assert all(dc.connected(0, v) for v in range(n))
    for nid in range(100, 140):
        a, b = rng.randrange(n), rng.randrange(n)
        edges[nid] = (a, b)
        dc.insert_edge(nid, a, b)
    for e in rng.sample(sorted(edges), 60):
        del edges[e]
        dc.delete_edge(e)
        comp = components(n, edges)
        assert all(dc.connected(0, v) == (comp[0] == comp[v]) for v in range(n))


def test_load_forest_rejects_cycle():
    dc = DynamicConnectivity(3)
    with pytest.raises(ValueError):
        dc.load_forest([(0, 0, 1), (1, 1, 2), (2, 2, 0)])


def test_duplicate_insert():
    dc = DynamicConnectivity(3)
    dc.insert_edge(0, 0, 1)
    with pytest.raises(KeyError):
        dc.insert_edge(0, 1, 2)
