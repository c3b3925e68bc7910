"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s``; the lines are also
collected into the terminal summary.
"""

import gc
import itertools
import math
import random
import time
from collections import Counter

import networkx as nx

from planarconn import generators as gens
from planarconn.barnette import barnette_tree, is_triconnected
from planarconn.brute import brute_components
from planarconn.decomp import build_block_cut, build_spqr, merge_check, same_kind_neighbours
from planarconn.decremental import DecrementalOracle
from planarconn.dynamic_reduction import DynamicOracle
from planarconn.edge_oracle import EdgeFailureOracle
from planarconn.matrix_tree import IDENTITY, MUL, VMUL, MatrixProductTree
from planarconn.planar_core import TreeCotreePair, embed_simple, reconnecting_cotree_edges
from planarconn.reduction_d import GeneralOracle
from planarconn.tri_oracle import TriOracle

RESULTS: dict[int, str] = {}


def report(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {num} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    RESULTS[num] = line
    print(line)
    assert ok, line


def agree(oracle, g, fv, fe, pairs) -> int:
    """Number of disagreements with BFS over the given query pairs."""
    comp = brute_components(g, fv, fe)
    bad = 0
    for u, v in pairs:
        if u in fv or v in fv:
            continue
        bad += oracle.connected(u, v) != (comp[u] == comp[v])
    return bad


def random_pairs(rng, n, k=10):
    return [(rng.randrange(n), rng.randrange(n)) for _ in range(k)]


def atlas_graphs(max_n=6):
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(G) and nx.check_planarity(G)[0]:
            yield embed_simple(n, list(G.edges()))


# -- 1 -----------------------------------------------------------------------
def test_criterion_1_edge_oracle():
    t0 = time.perf_counter()
    rng = random.Random(101)
    trials = bad = 0
    for _ in range(200):
        g = gens.planar_general(rng.randint(8, 512), rng)
        o = EdgeFailureOracle(g)
        for _ in range(50):
            F = set(rng.sample(range(g.m), rng.randint(1, min(16, g.m))))
            o.update(F)
            bad += agree(o, g, set(), F, random_pairs(rng, g.n))
            trials += 1
    graphs = exhaustive = 0
    for g in atlas_graphs(6):
        graphs += 1
        o = EdgeFailureOracle(g)
        pairs = list(itertools.combinations(range(g.n), 2))
        for k in range(3):
            for F in itertools.combinations(range(g.m), k):
                o.update(F)
                bad += agree(o, g, set(), set(F), pairs)
                exhaustive += 1
    secs = time.perf_counter() - t0
    report(1, "edge oracle vs brute force", bad == 0 and secs < 60,
           f"{trials} random trials + {exhaustive} exhaustive failure sets on {graphs} graphs, "
           f"{bad} disagreements, {secs:.1f}s (budget 60s)")


# -- 2 -----------------------------------------------------------------------
def test_criterion_2_triconnected_oracle():
    rng = random.Random(202)
    trials = bad = 0
    for k in range(200):
        if k % 10 == 0:
            g = gens.wheel(rng.randint(4, 60))
        elif k % 10 == 1:
            g = rng.choice([gens.cube(), gens.octahedron(), gens.complete4()])
        else:
            g = gens.triangulation(rng.randint(4, 300), rng)
        o = TriOracle(g)
        for _ in range(50):
            fv = set(rng.sample(range(g.n), rng.randint(0, min(8, g.n - 1))))
            fe = set(rng.sample(range(g.m), rng.randint(0, min(8, g.m))))
            o.update(vertices=fv, edges=fe)
            d = len(fv) + len(fe)
            st = o.stats
            assert st["paths"] <= 3 * d and st["lca_edges"] <= 3 * d and st["h_nodes"] <= 3 * max(d, 1)
            bad += agree(o, g, fv, fe, random_pairs(rng, g.n))
            trials += 1
    report(2, "triconnected oracle vs brute force", bad == 0,
           f"{trials} mixed trials, {bad} disagreements, structural bounds held")


# -- 3 -----------------------------------------------------------------------
def test_criterion_3_decremental_oracle():
    rng = random.Random(303)
    scripts = steps = bad = 0
    for k in range(1000):
        if k % 10 == 0:
            g = gens.wheel(rng.randint(4, 20))
        elif k % 10 == 1:
            g = rng.choice([gens.cube(), gens.octahedron(), gens.complete4()])
        else:
            g = gens.triangulation(rng.randint(4, 24), rng)
        o = DecrementalOracle(g, seed=k)
        items = [("v", x) for x in range(g.n)] + [("e", e) for e in range(g.m)]
        rng.shuffle(items)
        fv, fe = set(), set()
        for kind, x in items:
            if g.n - len(fv) < 4:
                break
            if kind == "v":
                o.fail_vertex(x)
                fv.add(x)
            else:
                o.fail_edge(x)
                fe.add(x)
            steps += 1
            alive = [v for v in range(g.n) if v not in fv]
            bad += agree(o, g, fv, fe, [(rng.choice(alive), rng.choice(alive)) for _ in range(5)])
        scripts += 1
    report(3, "decremental oracle, every prefix", bad == 0,
           f"{scripts} full scripts, {steps} prefixes, {bad} disagreements")


# -- 4 -----------------------------------------------------------------------
def test_criterion_4_general_reduction():
    rng = random.Random(404)
    trials = bad = 0
    worst = 0.0
    for _ in range(200):
        g = gens.planar_general(rng.randint(8, 96), rng)
        o = GeneralOracle(g)
        for _ in range(50):
            fv = set(rng.sample(range(g.n), rng.randint(0, 8)))
            fe = set(rng.sample(range(g.m), rng.randint(0, min(8, g.m))))
            o.update(vertices=fv, edges=fe)
            for b, blk in enumerate(o.blocks):
                # blocks touched this round; the bound is against their own failures
                if o.bc.node_of_block(b) in o.blue and blk.stats:
                    worst = max(worst, blk.stats["blue"] / max(blk.stats["failures"], 1))
            bad += agree(o, g, fv, fe, random_pairs(rng, g.n))
            trials += 1
    report(4, "general d-failure reduction vs brute force", bad == 0 and worst < 4,
           f"{trials} trials, {bad} disagreements, max blue/d = {worst:.2f} (< 4)")


# -- 5 -----------------------------------------------------------------------
def test_criterion_5_dynamic_reduction():
    rng = random.Random(505)
    scripts = steps = bad = 0
    touched = 0
    over = 0
    for k in range(1000):
        n = rng.randint(6, 30)
        g = gens.nested_biconnected(n, rng) if k % 2 else gens.planar_general(n, rng)
        o = DynamicOracle(g, seed=k)
        items = [("v", x) for x in range(g.n)] + [("e", e) for e in range(g.m)]
        rng.shuffle(items)
        fv, fe = set(), set()
        for kind, x in items[: rng.randint(1, len(items) - 1)]:
            if kind == "v":
                if len(fv) == g.n - 1:
                    continue
                o.fail_vertex(x)
                fv.add(x)
            else:
                o.fail_edge(x)
                fe.add(x)
            steps += 1
            alive = [v for v in range(g.n) if v not in fv]
            bad += agree(o, g, fv, fe, [(rng.choice(alive), rng.choice(alive)) for _ in range(5)])
        touched = max(touched, o.touched_max)
        over += o.touched_max > math.ceil(math.log2(g.n)) + 1
        scripts += 1
    report(5, "dynamic reduction, interleaved scripts", bad == 0 and over == 0,
           f"{scripts} scripts ({steps} failures), {bad} disagreements, "
           f"max touched nodes per failure {touched}, bound ceil(log2 n)+1 exceeded {over} times")


# -- 6 -----------------------------------------------------------------------
def test_criterion_6_matrix_tree():
    rng = random.Random(606)
    bad = 0
    for _ in range(10_000):
        length = rng.randint(1, 24)
        t = MatrixProductTree(length)
        arr = [IDENTITY] * (length + 1)
        for i in range(1, length + 1):
            arr[i] = rng.randrange(16)
            t.update(i, arr[i])
        for _ in range(2):
            i = rng.randint(1, length)
            arr[i] = rng.randrange(16)
            t.update(i, arr[i])
        i = rng.randint(1, length + 1)
        j = rng.randint(i - 1, length)
        mask = rng.randrange(16)
        naive = IDENTITY
        for k in range(i, j + 1):
            naive = MUL[naive][arr[k] & mask]
        bad += t.product(i, j, mask) != naive
        x = rng.randrange(4)
        best, v = i - 1, x
        if x:
            for k in range(i, length + 1):
                v = VMUL[v][arr[k] & mask]
                if not v:
                    break
                best = k
        bad += t.search(x, mask, i) != best
        bad += t.product(i, i - 1) != IDENTITY
    report(6, "matrix product tree vs naive products", bad == 0,
           f"10000 random sequences, {bad} mismatches, empty range = identity")


# -- 7 -----------------------------------------------------------------------
def test_criterion_7_update_scaling():
    t0 = time.perf_counter()
    rng = random.Random(707)
    g = gens.triangulation(100_000, rng)
    o = TriOracle(g)
    means = []
    gc.collect()
    gc.disable()
    try:
        for d in (64, 128, 256, 512):
            samples = []
            for _ in range(20):
                fv = rng.sample(range(g.n), d // 2)
                fe = rng.sample(range(g.m), d - d // 2)
                s = time.perf_counter()
                o.update(vertices=fv, edges=fe)
                samples.append(time.perf_counter() - s)
            means.append(sum(samples) / len(samples))
    finally:
        gc.enable()
    ratios = [b / a for a, b in zip(means, means[1:])]
    secs = time.perf_counter() - t0
    report(7, "triconnected update cost scaling (n = 1e5)", max(ratios) <= 3 and secs < 120,
           "mean update ms " + ", ".join(f"d={d}:{m * 1e3:.2f}" for d, m in zip((64, 128, 256, 512), means))
           + f"; ratios {', '.join(f'{r:.2f}' for r in ratios)} (<= 3); total {secs:.1f}s (< 120)")


# -- 8 -----------------------------------------------------------------------
def _amortized(n: int, seed: int) -> float:
    rng = random.Random(seed)
    g = gens.triangulation(n, rng)
    o = DecrementalOracle(g, seed=seed)
    items = [("v", x) for x in range(g.n)] + [("e", e) for e in range(g.m)]
    rng.shuffle(items)
    f = n // 2
    gc.collect()
    gc.disable()
    try:
        s = time.perf_counter()
        for kind, x in items[:f]:
            (o.fail_vertex if kind == "v" else o.fail_edge)(x)
        return (time.perf_counter() - s) / f
    finally:
        gc.enable()


def test_criterion_8_decremental_scaling():
    per = {}
    for n, reps in ((1_000, 3), (10_000, 2), (100_000, 1)):
        per[n] = min(_amortized(n, 800 + r) for r in range(reps))
    ratios = [per[10_000] / per[1_000], per[100_000] / per[10_000]]
    report(8, "decremental amortized cost scaling", max(ratios) <= 2.5,
           "us per failure " + ", ".join(f"n={n}:{t * 1e6:.0f}" for n, t in per.items())
           + f"; ratios {ratios[0]:.2f}, {ratios[1]:.2f} (<= 2.5)")


# -- 9 -----------------------------------------------------------------------
def _reconnecting(g, pair, e):
    adj = [[] for _ in range(g.n)]
    for f in range(g.m):
        if pair.in_tree[f] and f != e:
            a, b = g.endpoints[f]
            adj[a].append(b)
            adj[b].append(a)
    side, stack = {g.endpoints[e][0]}, [g.endpoints[e][0]]
    while stack:
        for y in adj[stack.pop()]:
            if y not in side:
                side.add(y)
                stack.append(y)
    return {f for f in range(g.m) if not pair.in_tree[f] and (g.endpoints[f][0] in side) != (g.endpoints[f][1] in side)}


def test_criterion_9_structural_suites():
    violations = Counter()
    checked = Counter()
    corpus = []
    for seed in range(25):
        for model, n in (("cycle", 12), ("wheel", 15), ("grid", 30), ("triangulation", 60), ("planar-general", 60)):
            corpus.append((model, gens.gen(model, n, seed)))
        rng = random.Random(seed)
        corpus.append(("nested", gens.nested_biconnected(rng.randint(5, 40), rng)))
    corpus += [("cube", gens.cube()), ("octahedron", gens.octahedron()), ("k4", gens.complete4())]
    for model, g in corpus:
        checked["euler"] += 1
        violations["euler"] += g.n - g.m + g.num_faces != 2
        pair = TreeCotreePair(g)
        for e in range(g.m):
            if pair.in_tree[e]:
                checked["cotree paths"] += 1
                violations["cotree paths"] += reconnecting_cotree_edges(pair, e) != _reconnecting(g, pair, e)
        if model in ("wheel", "triangulation", "cube", "octahedron", "k4") and is_triconnected(g):
            checked["barnette"] += 1
            bt = barnette_tree(g)
            deg = Counter()
            for v, p in enumerate(bt.parent):
                if p >= 0:
                    deg[v] += 1
                    deg[p] += 1
            spanning = sum(p >= 0 for p in bt.parent) == g.n - 1
            violations["barnette"] += not spanning or max(deg.values()) > 3
        bc = build_block_cut(g.n, [(i, a, b) for i, (a, b) in enumerate(g.endpoints)])
        for eids in bc.block_edges:
            if len(eids) < 3:
                continue
            verts = sorted({z for e in eids for z in g.endpoints[e]})
            loc = {v: i for i, v in enumerate(verts)}
            block = [(k, loc[g.endpoints[e][0]], loc[g.endpoints[e][1]]) for k, e in enumerate(eids)]
            t = build_spqr(len(verts), [(a, b) for _, a, b in block])
            checked["spqr"] += 1
            violations["merge"] += Counter(merge_check(t)) != Counter(block)
            violations["same-kind neighbours"] += bool(same_kind_neighbours(t))
    total = sum(violations.values())
    report(9, "structural suites", total == 0,
           ", ".join(f"{k}: {checked[k]} checked" for k in ("euler", "cotree paths", "barnette", "spqr"))
           + f"; violations {dict(violations) if total else 0}")
