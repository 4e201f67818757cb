"""
Counting permutations that split into increasing triples
========================================================

A permutation of 3n values is counted when its positions split into n
increasing triples.  Picking the triples and then ordering values inside
each gives the easy lower bound (3n)!/6^n.
"""

import sys
from math import factorial

from tripack import count_partitionable_permutations

for n in (1, 2):
    value = count_partitionable_permutations(n)
    bound = factorial(3 * n) // 6**n
    print(f"n={n}: {value} permutations (lower bound {bound}, ratio {value / bound:.2f})")

# n = 3 walks all 9! permutations and takes a while.
if "--slow" in sys.argv:
    print("n=3:", count_partitionable_permutations(3, allow_slow=True))
else:
    print("n=3: pass --slow to enumerate")
