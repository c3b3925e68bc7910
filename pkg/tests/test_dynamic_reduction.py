import math
import random
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from planarconn import generators as gens
from planarconn.brute import brute_components
from planarconn.dynamic_reduction import (
    BLACK, GREY, WHITE, DynamicBlockOracle, DynamicOracle, RecoveryUnsupported, build,
)
from planarconn.errors import AlreadyFailed, FailedEndpoint, UnknownEdge, UnknownVertex
from planarconn.matrix_tree import MUL, IDENTITY, pack
from planarconn.planar_core import embed_simple

THETA = [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]


def random_graph(seed):
    rng = random.Random(seed)
    n = rng.randint(5, 22)
    if seed % 2:
        return gens.nested_biconnected(n, rng), rng
    return gens.planar_general(n, rng, keep=rng.choice([0.15, 0.3, 0.6])), rng


def random_script(g, rng):
    elems = [("v", x) for x in range(g.n)] + [("e", e) for e in range(g.m)]
    rng.shuffle(elems)
    return elems[: rng.randint(1, len(elems) - 1)]


def apply_step(o, fv, fe, step):
    kind, x = step
    if kind == "v":
        o.fail_vertex(x)
        fv.add(x)
    else:
        o.fail_edge(x)
        fe.add(x)


def check_all_pairs(o, g, fv, fe):
    comp = brute_components(g, fv, fe)
    alive = [v for v in range(g.n) if v not in fv]
    for x in alive:
        for y in alive:
            if x < y:
                assert o.connected(x, y) == (comp[x] == comp[y]), (sorted(fv), sorted(fe), x, y)


def subtree(t, u):
    out, stack = [], [u]
    while stack:
        x = stack.pop()
        out.append(x)
        stack.extend(t.nodes[x].children)
    return out


def sigma_by_search(blk, u):
    """Transfer matrix of ``u`` by BFS over the real edges hanging below it,
    minus its heavy child's subtree."""
    t = blk.tree
    h = t.heavy[u]
    below = set(subtree(t, u)) - set(subtree(t, h))
    dead_v, dead_e = blk.failed_vertices, blk.failed_edges
    adj = {}
    for w in below:
        for lab, a, b in t.nodes[w].model:
            if t.is_real(lab) and lab not in dead_e and a not in dead_v and b not in dead_v:
                if lab == 0 and u != t.root:
                    continue
                adj.setdefault(a, []).append(b)
                adj.setdefault(b, []).append(a)

    def reach(s):
        seen, todo = {s}, deque([s])
        while todo:
            x = todo.popleft()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen

    subs = sorted(t.nodes[h].poles)
    poles = sorted(t.nodes[u].poles)
    rows = []
    for s in subs:
        r = reach(s) if s not in dead_v else set()
        rows.append([p in r and p not in dead_v for p in poles])
    return pack(rows)


def live_entries(blk, u, m):
    t = blk.tree
    subs, poles = sorted(t.nodes[t.heavy[u]].poles), sorted(t.nodes[u].poles)
    dead = blk.failed_vertices
    return {(r, c): (m >> (2 * r + c)) & 1 for r in range(2) for c in range(2)
            if subs[r] not in dead and poles[c] not in dead}


def audit_block(blk):
    t = blk.tree
    if t is None:
        return
    assert blk.audit_colors()
    for pid, path in enumerate(blk.paths):
        mt = blk.matrices[pid]
        naive = IDENTITY
        for i in range(2, len(path)):
            u = path[i]
            assert live_entries(blk, u, mt.sigma[i]) == live_entries(blk, u, sigma_by_search(blk, u)), ("sigma", u)
            naive = MUL[naive][mt.sigma[i]]
        if len(path) > 2:
            assert mt.product(2, len(path) - 1) == naive
        if mt.length:
            assert mt.prod[1][15] == mt.product(1, mt.length)


# -- construction ------------------------------------------------------------
def test_triconnected_graph_is_single_rigid_node():
    o = build(gens.octahedron())
    blk = o.blocks[0]
    assert [nd.kind for nd in blk.tree.nodes] == ["R"]
    assert all(len(p) == 2 for p in blk.paths)


def test_cycle_is_one_series_node():
    o = build(gens.cycle(7))
    assert [nd.kind for nd in o.blocks[0].tree.nodes] == ["S"]
    assert all(o.connected(0, y) for y in range(7))


def test_theta_initial_colours():
    blk = DynamicBlockOracle(5, THETA)
    nodes = blk.tree.nodes
    for u, nd in enumerate(nodes):
        if u == blk.tree.root:
            continue
        leaf = not nd.children
        expect = BLACK if nd.kind in "PR" or leaf else GREY
        assert blk.color[u] == expect, (u, nd.kind)


def test_initial_rule_on_nested_graphs():
    for seed in range(30):
        rng = random.Random(seed)
        blk = DynamicOracle(gens.nested_biconnected(rng.randint(6, 25), rng)).blocks[0]
        t = blk.tree
        for u, nd in enumerate(t.nodes):
            if u != t.root:
                grey = nd.kind == "S" and bool(nd.children)
                assert blk.color[u] == (GREY if grey else BLACK)
        audit_block(blk)


# -- updates -----------------------------------------------------------------
def test_theta_interior_failure_whitens_one_series_child():
    blk = DynamicBlockOracle(5, THETA)
    blk.fail_vertex(3)
    t = blk.tree
    owner = t.phi[3]
    assert t.nodes[owner].kind == "S" and blk.color[owner] == WHITE
    parent = t.nodes[owner].parent
    assert t.nodes[parent].kind == "P" and blk._valid(parent)
    assert blk.connected(0, 1) and blk.connected(2, 4)


def test_theta_script_matches_brute_force():
    g = embed_simple(5, THETA)
    for seed in range(20):
        rng = random.Random(seed)
        o = build(g)
        fv, fe = set(), set()
        for step in random_script(g, rng):
            apply_step(o, fv, fe, step)
            check_all_pairs(o, g, fv, fe)


def test_single_rigid_node_delegates():
    g = gens.cube()
    o = build(g)
    blk = o.blocks[0]
    o.fail_vertex(0)
    assert blk.twins[0].failed == {0}
    check_all_pairs(o, g, {0}, set())


def test_recovery_only_for_series_and_parallel():
    blk = DynamicBlockOracle(5, THETA)
    t = blk.tree
    s = next(u for u, nd in enumerate(t.nodes) if nd.kind == "S" and u != t.root and not nd.children)
    tw = blk.twins[s]
    lab = next(lab for lab, _, _ in t.nodes[s].model if t.is_real(lab))
    tw.set_edge(lab, False)
    tw.set_edge(lab, True)
    p0, p1 = t.nodes[s].poles
    assert tw.connected(p0, p1, True)
    rigid = DynamicBlockOracle(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)])
    with pytest.raises(RecoveryUnsupported):
        rigid.twins[0].set_edge(1, True)


def test_errors():
    o = build(gens.wheel(6))
    o.fail_vertex(2)
    with pytest.raises(AlreadyFailed):
        o.fail_vertex(2)
    o.fail_edge(0)
    with pytest.raises(AlreadyFailed):
        o.fail_edge(0)
    with pytest.raises(FailedEndpoint):
        o.connected(2, 3)
    with pytest.raises(UnknownVertex):
        o.connected(0, 99)
    with pytest.raises(UnknownEdge):
        o.fail_edge(999)


# -- queries -----------------------------------------------------------------
def test_resolve_without_failures_reaches_root():
    rng = random.Random(5)
    blk = DynamicOracle(gens.nested_biconnected(20, rng)).blocks[0]
    for z in range(blk.n):
        assert blk.resolve(z)[1] == blk.tree.root


def test_resolve_returns_vertex_cut_off_from_poles():
    blk = DynamicBlockOracle(5, THETA)
    t = blk.tree
    blk.fail_edge(2)
    blk.fail_edge(3)
    assert blk.resolve(3) == (3, t.phi[3])


def test_resolved_vertex_is_connected_and_closed_off():
    for seed in range(40):
        g, rng = random_graph(seed)
        o = DynamicOracle(g, seed=seed)
        fv, fe = set(), set()
        for step in random_script(g, rng):
            apply_step(o, fv, fe, step)
            comp = brute_components(g, fv, fe)
            for blk, loc in zip(o.blocks, o.local):
                if blk.tree is None:
                    continue
                glob = {i: v for v, i in loc.items()}
                t = blk.tree
                for z in range(blk.n):
                    if z in blk.failed_vertices:
                        continue
                    x3, u3 = blk.resolve(z)
                    assert comp[glob[x3]] == comp[glob[z]]
                    if u3 != t.root:
                        # closed off: the poles of u3 lie in other components
                        for p in t.nodes[u3].poles:
                            assert p in blk.failed_vertices or comp[glob[p]] != comp[glob[z]]


# -- randomized scripts ------------------------------------------------------
def test_random_scripts_match_brute_force():
    for seed in range(120):
        g, rng = random_graph(seed)
        o = DynamicOracle(g, seed=seed)
        fv, fe = set(), set()
        for step in random_script(g, rng):
            apply_step(o, fv, fe, step)
            check_all_pairs(o, g, fv, fe)


def test_audits_and_touch_bound_hold_every_step():
    for seed in range(60):
        g, rng = random_graph(seed)
        o = DynamicOracle(g, seed=seed)
        fv, fe = set(), set()
        for step in random_script(g, rng):
            apply_step(o, fv, fe, step)
            for blk in o.blocks:
                audit_block(blk)
        assert o.touched_max <= math.ceil(math.log2(g.n)) + 1


def test_colours_are_monotone():
    allowed = {BLACK: {BLACK, GREY, WHITE}, GREY: {GREY, WHITE}, WHITE: {WHITE}}
    for seed in range(1, 60, 2):
        g, rng = random_graph(seed)
        o = DynamicOracle(g, seed=seed)
        blk = o.blocks[0]
        before = list(blk.color)
        fv, fe = set(), set()
        for step in random_script(g, rng):
            apply_step(o, fv, fe, step)
            for u, (a, b) in enumerate(zip(before, blk.color)):
                if u != blk.tree.root:
                    assert b in allowed[a], (seed, u, a, b)
            before = list(blk.color)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(6, 18), st.floats(0.0, 1.0))
def test_hypothesis_interleaved_queries(seed, n, vertex_share):
    rng = random.Random(seed)
    g = gens.nested_biconnected(n, rng) if seed % 3 else gens.planar_general(n, rng)
    o = DynamicOracle(g, seed=seed)
    fv, fe = set(), set()
    for _ in range(rng.randint(1, n)):
        if rng.random() < vertex_share:
            alive = [v for v in range(g.n) if v not in fv]
            if len(alive) <= 1:
                break
            step = ("v", rng.choice(alive))
        else:
            left = [e for e in range(g.m) if e not in fe]
            if not left:
                break
            step = ("e", rng.choice(left))
        apply_step(o, fv, fe, step)
        alive = [v for v in range(g.n) if v not in fv]
        comp = brute_components(g, fv, fe)
        for _ in range(10):
            x, y = rng.choice(alive), rng.choice(alive)
            assert o.connected(x, y) == (comp[x] == comp[y])
