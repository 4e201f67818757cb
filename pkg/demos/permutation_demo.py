"""
Colored permutations and complete multipartite graphs
=====================================================

A colored permutation asks for increasing triples colored 1, 2, 3 from left
to right.  Two bipartite matchings answer it.  Complete multipartite graphs
are permutation graphs too, and a largest-classes-first greedy packs them.
"""

from tripack import (
    MultipartiteSpec,
    colored_partition,
    colored_partition_bruteforce,
    graph_from_permutation,
    max_pattern_packing_exact,
    triangle_packing_multipartite,
    triangle_partition_multipartite,
)
from tripack.gen import GenConfig, gen_colored_perm

cp = gen_colored_perm(GenConfig(seed=3, n=12, planted=True), 3)
print("permutation:", cp.model.pi)
print("colors     :", cp.colors)
print("tuples     :", colored_partition(cp).groups)

# Without planting, yes-instances are rare; brute force agrees either way.
yes = agree = 0
for seed in range(300):
    cp = gen_colored_perm(GenConfig(seed=seed, n=6), 3)
    fast = colored_partition(cp) is not None
    yes += fast
    agree += fast == (colored_partition_bruteforce(cp) is not None)
print(f"random n=6: {yes} of 300 have a colored partition, {agree} agree with brute force")

# Complete multipartite graphs: sizes in, triangles out.
for sizes in [(2, 2, 2), (5, 2, 2), (3, 3, 3, 3), (4, 1, 1)]:
    spec = MultipartiteSpec(sizes)
    size, triples, _ = triangle_packing_multipartite(spec)
    part = triangle_partition_multipartite(spec)
    exact = max_pattern_packing_exact(spec.graph(), memo=True).size
    print(f"K{sizes}: packing {size} (oracle {exact}), partition {'yes' if part else 'no'}")

# Each such graph is realised by a block permutation.
spec = MultipartiteSpec((3, 2, 1))
print("\nblock permutation:", spec.block_permutation().pi)
print("same graph:", graph_from_permutation(spec.block_permutation()) == spec.graph())
