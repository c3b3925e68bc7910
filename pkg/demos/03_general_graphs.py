"""Arbitrary planar graphs: blocks, SPQR trees, and batches of failures.

A general graph is split into biconnected blocks, and each block into
series, parallel and rigid pieces.  After a batch of failures only the
pieces near a failure get an oracle of their own; a query climbs from a
vertex through the untouched pieces to the highest point it still reaches.
"""

import random
from collections import Counter

from planarconn import generators as gens
from planarconn.brute import brute_components
from planarconn.reduction_d import GeneralOracle

rng = random.Random(3)
g = gens.planar_general(120, rng, keep=0.45)
oracle = GeneralOracle(g)
bc = oracle.bc
arts = [v for v in bc.art_vertex if v >= 0]
print(f"graph: {g.n} vertices, {g.m} edges")
print(f"{len(bc.block_edges)} blocks, {len(arts)} articulation points")

kinds = Counter(nd.kind for blk in oracle.blocks if blk.tree for nd in blk.tree.nodes)
print(f"SPQR pieces across all blocks: {dict(kinds)}")

for d in (2, 8, 24):
    fv = set(rng.sample(range(g.n), d // 2))
    fe = set(rng.sample(range(g.m), d - d // 2))
    oracle.update(vertices=fv, edges=fe)
    coloured = sum(len(blk.colored) for blk in oracle.blocks if blk.tree)
    comp = brute_components(g, fv, fe)
    alive = [v for v in range(g.n) if v not in fv]
    pieces = len({comp[v] for v in alive})
    ok = all(oracle.connected(a, b) == (comp[a] == comp[b]) for a in alive for b in alive)
    print(f"\nd={d:2d}: {len(oracle.red)} failed articulation points, {len(oracle.blue)} touched blocks, "
          f"{coloured} coloured SPQR nodes")
    print(f"      {pieces} components remain; all {len(alive) ** 2} pairs agree with BFS: {ok}")
