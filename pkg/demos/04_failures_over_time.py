"""Failures that arrive one at a time.

The dynamic oracle keeps two small oracles per SPQR node (heavy child's
virtual edge on or off) and colours each node white, grey or black.  Each
failure touches only a logarithmic number of nodes on its way to the root,
and queries hop along heavy paths using 2x2 boolean matrix products.
"""

import random
from collections import Counter

from planarconn import generators as gens
from planarconn.brute import brute_components
from planarconn.dynamic_reduction import DynamicOracle

rng = random.Random(11)
g = gens.nested_biconnected(60, rng)
oracle = DynamicOracle(g)
blk = oracle.blocks[0]
t = blk.tree
print(f"biconnected graph with {g.n} vertices; SPQR tree has {len(t.nodes)} nodes "
      f"on {len(blk.paths)} heavy paths")
print("initial colours:", dict(Counter(blk.color[u] for u in range(len(t.nodes)) if u != t.root)))

order = list(range(g.n))
rng.shuffle(order)
fv = set()
print("\nfailed  components  colours (white/grey/black)  max touched")
for step, v in enumerate(order[:30], 1):
    oracle.fail_vertex(v)
    fv.add(v)
    if step % 5:
        continue
    comp = brute_components(g, fv, set())
    alive = [x for x in range(g.n) if x not in fv]
    assert all(oracle.connected(a, b) == (comp[a] == comp[b]) for a in alive for b in alive)
    c = Counter(blk.color[u] for u in range(len(t.nodes)) if u != t.root)
    print(f"{step:6d}  {len({comp[x] for x in alive}):10d}  "
          f"{c['white']:5d} /{c['grey']:4d} /{c['black']:5d}          {oracle.touched_max}")
print("\nevery checkpoint agreed with BFS on all pairs")
