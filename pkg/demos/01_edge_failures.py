"""Cutting edges out of a grid and asking who can still reach whom.

The edge-failure oracle works on the dual side: failed edges, drawn in the
dual graph, enclose regions of faces, and two vertices stay connected
exactly when they sit in the same region.
"""

from planarconn import generators as gens
from planarconn.brute import brute_connected
from planarconn.edge_oracle import EdgeFailureOracle

g = gens.grid(16)  # 4 x 4 grid
print(f"grid: {g.n} vertices, {g.m} edges, {g.num_faces} faces")

oracle = EdgeFailureOracle(g)


def edge_between(a, b):
    return next(i for i, ends in enumerate(g.endpoints) if set(ends) == {a, b})


# Wall off the top-left corner vertex 0 by cutting both of its edges.
cut = [edge_between(0, 1), edge_between(0, 4)]
oracle.update(cut)
print("\ncut both edges at the corner:")
for v in (1, 5, 15):
    print(f"  0 ~ {v}: {oracle.connected(0, v)}")

# A longer cut: sever the grid between columns 1 and 2.
wall = [edge_between(r * 4 + 1, r * 4 + 2) for r in range(4)]
oracle.update(wall)
print("\nwall down the middle:")
print(f"  0 ~ 1: {oracle.connected(0, 1)}   0 ~ 3: {oracle.connected(0, 3)}")
print(f"  regions found: {oracle.labeling.num_labels}")

# Leave one gap in the wall and everything joins up again.
oracle.update(wall[:-1])
print(f"\nwall with a gap: 0 ~ 3: {oracle.connected(0, 3)}")

# Every answer matches a plain breadth-first search.
agree = all(
    oracle.connected(u, v) == brute_connected(g, set(), set(wall[:-1]), u, v)
    for u in range(g.n) for v in range(g.n)
)
print(f"agrees with BFS on all {g.n * g.n} pairs: {agree}")
