"""
Squares in bipartite graphs
===========================

With a strong ordering, squares in a bipartite permutation graph are packed
greedily from the front of the merged order.  Dropping the ordering makes
the problem hard: a 3-dimensional matching instance maps to a bipartite
graph whose square packing reaches a threshold exactly when the matching
exists.
"""

from tripack import (
    SQUARE,
    c4_packing_bipperm,
    extract_matching,
    lift_solution,
    max_pattern_packing_exact,
    merged_order,
    reduce,
)
from tripack.gen import GenConfig, gen_3dm_with_solution, gen_bipperm

model = gen_bipperm(GenConfig(seed=11, n=14))
print("X:", model.X, "Y:", model.Y)
print("merged order:", merged_order(model))
packing = c4_packing_bipperm(model)
print("greedy squares:", packing.groups)
print("oracle size   :", max_pattern_packing_exact(model.graph, SQUARE).size)

# Hardness gadget on a planted instance.
inst, planted = gen_3dm_with_solution(GenConfig(seed=2, n=2, planted=True, m=3))
gadget = reduce(inst)
print(f"\n3DM q={inst.q} triples={inst.triples}")
print(f"gadget: {gadget.graph.n} vertices, threshold {gadget.target}")
best = max_pattern_packing_exact(gadget.graph, SQUARE, allow_large=True)
print("best square packing:", best.size)
print("matching read back :", extract_matching(inst, best.witness, gadget))
print("planted matching   :", sorted(planted))
print("lifted size        :", len(lift_solution(inst, planted, gadget)))
