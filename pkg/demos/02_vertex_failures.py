"""Knocking vertices out of a triangulation.

A spanning tree of maximum degree three is walked around as one closed
sequence.  Failed vertices cut the walk into pieces, and the oracle glues
the pieces back together using a handful of witness edges, so the work
per update depends on the number of failures rather than on the graph.
"""

import random
import time

from planarconn import generators as gens
from planarconn.brute import brute_components
from planarconn.tri_oracle import TriOracle

rng = random.Random(7)
g = gens.triangulation(2000, rng)
t = time.perf_counter()
oracle = TriOracle(g)
print(f"triangulation with {g.n} vertices; preprocessing took {time.perf_counter() - t:.2f}s")

# Failing the whole neighbourhood of a vertex isolates it.
v = 10
ring = set(g.neighbors(v))
oracle.update(vertices=ring)
print(f"\nfail the {len(ring)} neighbours of {v}: connected to 11? {oracle.connected(v, 11) if 11 not in ring else 'n/a'}")
print(f"walk pieces: {oracle.stats['paths']}, witness edges: {oracle.stats['lca_edges']}")

# Random mixed failures, growing in size; the pieces stay proportional to d.
print("\n   d  pieces  witnesses  update ms")
for d in (4, 16, 64, 256):
    fv = set(rng.sample(range(g.n), d // 2))
    fe = set(rng.sample(range(g.m), d - d // 2))
    t = time.perf_counter()
    oracle.update(vertices=fv, edges=fe)
    ms = (time.perf_counter() - t) * 1e3
    print(f"{d:4d}  {oracle.stats['paths']:6d}  {oracle.stats['lca_edges']:9d}  {ms:9.2f}")

comp = brute_components(g, fv, fe)
alive = [x for x in range(g.n) if x not in fv]
sample = [(rng.choice(alive), rng.choice(alive)) for _ in range(2000)]
ok = all(oracle.connected(a, b) == (comp[a] == comp[b]) for a, b in sample)
print(f"\n2000 random queries agree with BFS: {ok}")
