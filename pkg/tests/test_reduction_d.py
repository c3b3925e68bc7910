import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from planarconn import generators as gens
from planarconn.brute import brute_components
from planarconn.errors import FailedEndpoint, UnknownElement
from planarconn.planar_core import embed_simple
from planarconn.reduction_d import BlockOracle, GeneralOracle, preprocess


def components(n, edges, fv, fe):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (a, b) in enumerate(edges):
        if i not in fe and a not in fv and b not in fv:
            parent[find(a)] = find(b)
    return [find(v) for v in range(n)]


def check_all_pairs(o, g, fv, fe):
    comp = brute_components(g, fv, fe)
    alive = [v for v in range(g.n) if v not in fv]
    for x in alive:
        for y in alive:
            assert o.connected(x, y) == (comp[x] == comp[y]), (sorted(fv), sorted(fe), x, y)


THETA = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]
BOWTIE = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
# two K4s on 0-3 and 6-9 joined by the path 3-4-5-6
BARBELL = [(a, b) for a, b in itertools.combinations(range(4), 2)] + [(3, 4), (4, 5), (5, 6)] + \
    [(a, b) for a, b in itertools.combinations(range(6, 10), 2)]


def test_triconnected_graph_is_one_r_node():
    o = preprocess(gens.complete4())
    assert len(o.blocks) == 1
    assert [nd.kind for nd in o.blocks[0].tree.nodes] == ["R"]


def test_theta_has_no_r_node():
    o = preprocess(embed_simple(5, THETA))
    assert "R" not in {nd.kind for nd in o.blocks[0].tree.nodes}


def test_barbell_block_structure():
    o = preprocess(embed_simple(10, BARBELL))
    sizes = sorted(len(b) for b in o.bc.block_edges)
    assert sizes == [1, 1, 1, 6, 6]


def test_no_failures():
    g = embed_simple(10, BARBELL)
    o = preprocess(g)
    o.update()
    assert all(o.connected(0, v) for v in range(10))
    assert not o.blue and not o.red


def test_bowtie_centre_failure():
    g = embed_simple(5, BOWTIE)
    o = preprocess(g)
    o.update(vertices=[0])
    assert o.connected(1, 2) and o.connected(3, 4)
    assert not o.connected(1, 3)


def test_theta_interior_vertex():
    g = embed_simple(5, THETA)
    o = preprocess(g)
    o.update(vertices=[2])
    assert o.connected(0, 1) and o.connected(3, 4)


def test_barbell_path_vertex():
    g = embed_simple(10, BARBELL)
    o = preprocess(g)
    o.update(vertices=[4])
    assert o.connected(0, 3) and o.connected(7, 9)
    assert not o.connected(0, 9)
    check_all_pairs(o, g, {4}, set())


def test_dead_poles_with_split_model():
    # K4 on a=0, b=1, x=2, y=3 with x-y subdivided by 4 and a-b by 5; killing
    # a, b and 4 separates x from y inside an R-node whose poles are both gone
    edges = [(0, 5), (5, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)]
    o = BlockOracle(6, edges)
    assert [nd.kind for nd in o.tree.nodes] == ["S", "R", "S"]
    o.update(vertices=[0, 1, 4])
    assert not o.connected(2, 3)
    assert o.stats["sealed"] == 1


def test_errors():
    g = embed_simple(5, BOWTIE)
    o = preprocess(g)
    with pytest.raises(UnknownElement):
        o.update(vertices=[9])
    with pytest.raises(UnknownElement):
        o.update(edges=[99])
    o.update(F=[("v", 0), ("e", 1)])
    with pytest.raises(FailedEndpoint):
        o.connected(0, 1)


SMALL = [
    ("theta", lambda: embed_simple(5, THETA)),
    ("bowtie", lambda: embed_simple(5, BOWTIE)),
    ("cube", gens.cube),
    ("wheel", lambda: gens.wheel(8)),
    ("octahedron", gens.octahedron),
] + [(f"general{s}", lambda s=s: gens.planar_general(9, random.Random(s))) for s in range(8)]


@pytest.mark.parametrize("name,make", SMALL, ids=[s[0] for s in SMALL])
def test_exhaustive_two_failures(name, make):
    g = make()
    o = preprocess(g)
    elems = [("v", v) for v in range(g.n)] + [("e", e) for e in range(g.m)]
    for k in range(3):
        for F in itertools.combinations(elems, k):
            fv = {x for t, x in F if t == "v"}
            fe = {x for t, x in F if t == "e"}
            o.update(F)
            check_all_pairs(o, g, fv, fe)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(4, 45), st.integers(0, 12))
def test_random_failures_match_bfs(seed, n, d):
    rng = random.Random(seed)
    g = gens.planar_general(n, rng)
    o = preprocess(g)
    nv = rng.randrange(d + 1)
    fv = set(rng.sample(range(g.n), min(nv, g.n - 1)))
    fe = set(rng.sample(range(g.m), min(d - len(fv), g.m)))
    o.update(vertices=fv, edges=fe)
    check_all_pairs(o, g, fv, fe)
    for b in o.blocks:
        if b.tree is not None and b.stats:
            assert b.stats["blue"] < 4 * max(b.stats["failures"], 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_block_oracle_on_multigraphs(seed):
    rng = random.Random(seed)
    g = gens.triangulation(rng.randrange(4, 14), rng)
    edges = list(g.endpoints)
    edges += [rng.choice(edges) for _ in range(rng.randrange(1, 6))]
    rng.shuffle(edges)
    o = BlockOracle(g.n, edges)
    for _ in range(5):
        fv = set(rng.sample(range(g.n), rng.randrange(0, 4)))
        fe = set(rng.sample(range(len(edges)), rng.randrange(0, 5)))
        o.update(fv, fe)
        comp = components(g.n, edges, fv, fe)
        alive = [v for v in range(g.n) if v not in fv]
        for x in alive:
            for y in alive:
                assert o.connected(x, y) == (comp[x] == comp[y])


def real_edges_below(t, u, fe):
    return [(a, b) for w in t.tree.preorder if t.tree.is_ancestor(u, w)
            for lab, a, b in t.nodes[w].model if t.is_real(lab) and lab not in fe]


@pytest.mark.parametrize("seed", range(30))
def test_resolved_pole_is_reached_and_closed_off(seed):
    rng = random.Random(seed)
    g = gens.planar_general(rng.randrange(6, 16), rng, 0.8)
    o = GeneralOracle(g)
    for _ in range(6):
        fv = set(rng.sample(range(g.n), rng.randrange(0, 5)))
        fe = set(rng.sample(range(g.m), rng.randrange(0, 4)))
        o.update(vertices=fv, edges=fe)
        for b, blk in enumerate(o.blocks):
            t = blk.tree
            if t is None or o.bc.node_of_block(b) not in o.blue:
                continue
            bv = o.bc.block_vertices[b]
            edges = blk.edges
            lfv = {i for i, v in enumerate(bv) if v in fv}
            lfe = {k for k, e in enumerate(o.bc.block_edges[b]) if e in fe}
            comp = components(len(bv), edges, lfv, lfe)
            for x in range(len(bv)):
                if x in lfv:
                    continue
                x3, u3 = blk.resolve(x)
                if x3 is None:
                    continue
                assert comp[x] == comp[x3]
                if u3 == t.root:
                    continue
                # nothing below u3 links x3 back to the poles of u3
                local = components(len(bv), real_edges_below(t, u3, lfe), lfv, set())
                for p in t.nodes[u3].poles:
                    if p not in lfv:
                        assert local[p] != local[x3]
