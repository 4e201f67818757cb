"""
Triangles in interval graphs
============================

Three routines share one clique arrangement: the greedy partition test,
the branching search for a maximum packing, and the count of disjoint
maximal cliques.
"""

import math
import random

from tripack import (
    IntervalModel,
    consecutive_arrangement,
    graph_from_intervals,
    max_disjoint_maximal_cliques,
    triangle_packing_interval_exp,
    triangle_partition_interval,
)
from tripack.gen import GenConfig, gen_interval

# Two overlapping runs of three intervals each.
model = IntervalModel(((0, 3), (1, 4), (2, 5), (6, 9), (7, 10), (8, 11)))
print("maximal cliques:", [sorted(c) for c in consecutive_arrangement(model).cliques])
print("partition:", triangle_partition_interval(model).groups)

# A random model: the partition test, then the exact packing search.
model = gen_interval(GenConfig(seed=7, n=18))
g = graph_from_intervals(model)
print(f"\nrandom model: n={g.n}, m={g.m}")
print("partition:", triangle_partition_interval(model))
res = triangle_packing_interval_exp(model)
print(f"packing size {res.size} after {res.nodes_explored} search nodes")

# The search tree roughly follows T(n) = T(n-1) + T(n-3).
rng = random.Random(1)
prev = None
for n in (15, 20, 25, 30):
    nodes = triangle_packing_interval_exp(gen_interval(GenConfig(seed=rng.randrange(10**6), n=n))).nodes_explored
    note = "" if prev is None else f"  per-vertex ratio {math.exp((math.log(nodes) - math.log(prev[1])) / (n - prev[0])):.3f}"
    print(f"n={n:2d} nodes={nodes}{note}")
    prev = (n, nodes)

# Disjoint maximal cliques and a minimum clique transversal come out together.
res = max_disjoint_maximal_cliques(model)
print("\ndisjoint maximal cliques:", res.count, "transversal:", sorted(res.transversal))
