"""
Dynamic programming over decompositions
=======================================

Distance-hereditary graphs come with a twinset tree; k-modular graphs with
a modular decomposition whose prime nodes are small.  Both run the same
free-vertex/free-edge tables bottom-up.
"""

import time

from tripack import (
    Graph,
    KModularCertificate,
    dh_tree_from_construction,
    max_pattern_packing_exact,
    modular_decomposition,
    triangle_packing_dh,
    triangle_packing_modular,
)
from tripack.gen import GenConfig, gen_dh_steps, gen_modular
from tripack.io import format_dh_tree, format_modular_tree

# A small construction: a triangle, a pendant, then twins.
steps = [("start",), ("truetwin", 1), ("truetwin", 2), ("pendant", 3), ("falsetwin", 4), ("truetwin", 1)]
g, tree = dh_tree_from_construction(steps)
print("edges:", sorted(g.edges()))
print(format_dh_tree(tree))
res = triangle_packing_dh(g, tree)
print("packing:", res.packing.groups, "oracle:", max_pattern_packing_exact(g).size)

# Larger random ones go well past what the oracle can handle.
for n in (20, 40, 80):
    g, tree = dh_tree_from_construction(gen_dh_steps(GenConfig(seed=n, n=n)))
    t0 = time.perf_counter()
    size = triangle_packing_dh(g, tree).size
    print(f"DH n={n}: {size} triangles in {1000 * (time.perf_counter() - t0):.1f} ms")

# The 5-cycle is prime, so the decomposition is a single node of width 5.
c5 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
print("\n" + format_modular_tree(modular_decomposition(c5)))

g, tree = gen_modular(GenConfig(seed=4, n=12), 5)
res = triangle_packing_modular(g, KModularCertificate(tree, 5))
print(format_modular_tree(tree))
print("packing:", res.size, "oracle:", max_pattern_packing_exact(g).size)
