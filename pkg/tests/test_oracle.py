import random
from itertools import combinations

import pytest

from tripack.errors import InstanceTooLarge
from tripack.graph import KR, SQUARE, TRIANGLE, Graph, IntervalModel, is_partition, verify_packing
from tripack.oracle import (
    candidate_groups,
    count_partitionable_permutations,
    max_pattern_packing_exact,
    min_clique_transversal_exact,
    partitionable_lower_bound,
    pattern_partition_exact,
)

from conftest import random_graph

# exhaustive counts, frozen after the first computation and cross-checked by
# enumerating triple partitions directly
PARTITIONABLE = {1: 1, 2: 102, 3: 64013}

K33 = Graph.from_edges(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
C5 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
C6 = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])


def naive_triangle_packing(g: Graph) -> int:
    """Largest disjoint family among all subsets of triangles."""
    tris = [t for t in combinations(g.vertices, 3) if g.is_clique(t)]
    best = 0
    for k in range(1, len(tris) + 1):
        if k <= best or 3 * k > g.n:
            break
        for fam in combinations(tris, k):
            if len({v for t in fam for v in t}) == 3 * k:
                best = k
                break
    return best


def test_spec_examples():
    assert max_pattern_packing_exact(Graph.complete(6)).size == 2
    assert max_pattern_packing_exact(C5).size == 0
    assert max_pattern_packing_exact(K33, SQUARE).size == 1


def test_partition_examples():
    two = Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
    p = pattern_partition_exact(two)
    assert p is not None and len(p) == 2 and is_partition(two, p)
    assert pattern_partition_exact(Graph.complete(4)) is None
    assert pattern_partition_exact(C6, SQUARE) is None


def test_kr_packing():
    assert max_pattern_packing_exact(Graph.complete(9), KR, 4).size == 2
    assert max_pattern_packing_exact(Graph.complete(9), KR, 1).size == 9


def test_candidate_groups_are_sorted_cliques():
    rng = random.Random(7)
    for _ in range(30):
        g = random_graph(rng, 8)
        cands = candidate_groups(g, TRIANGLE)
        assert cands == sorted(cands)
        assert set(cands) == {t for t in combinations(g.vertices, 3) if g.is_clique(t)}


@pytest.mark.parametrize("seed", range(40))
def test_matches_naive_search(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(1, 9))
    res = max_pattern_packing_exact(g)
    assert verify_packing(g, res.witness)
    assert res.size == naive_triangle_packing(g)


@pytest.mark.parametrize("seed", range(20))
def test_memo_agrees_with_branch_and_bound(seed):
    rng = random.Random(100 + seed)
    g = random_graph(rng, rng.randint(4, 14))
    for kind in (TRIANGLE, SQUARE):
        a = max_pattern_packing_exact(g, kind)
        b = max_pattern_packing_exact(g, kind, memo=True)
        assert a.size == b.size
        assert verify_packing(g, b.witness)


def test_deterministic_witness_and_nodes():
    g = random_graph(random.Random(3), 12, 0.5)
    a, b = max_pattern_packing_exact(g), max_pattern_packing_exact(g)
    assert a == b


def test_size_bound():
    with pytest.raises(InstanceTooLarge):
        max_pattern_packing_exact(Graph.empty(17))
    assert max_pattern_packing_exact(Graph.empty(17), allow_large=True).size == 0


def test_count_small():
    assert count_partitionable_permutations(0) == 1
    assert count_partitionable_permutations(1) == PARTITIONABLE[1]
    assert count_partitionable_permutations(2) == PARTITIONABLE[2]
    assert PARTITIONABLE[2] >= partitionable_lower_bound(2) == 20


@pytest.mark.slow
def test_count_three_triples():
    assert count_partitionable_permutations(3) == PARTITIONABLE[3]


def test_count_guard():
    assert partitionable_lower_bound(3) == 1680
    with pytest.raises(InstanceTooLarge):
        count_partitionable_permutations(4)
    with pytest.raises(InstanceTooLarge):
        count_partitionable_permutations(5, allow_slow=True)


def test_clique_transversal_examples():
    assert len(min_clique_transversal_exact(IntervalModel(((0, 3), (1, 4), (2, 5))))) == 1
    two = IntervalModel(((0, 3), (1, 4), (2, 5), (6, 9), (7, 10), (8, 11)))
    assert len(min_clique_transversal_exact(two)) == 2
    assert min_clique_transversal_exact(IntervalModel(((0, 2), (1, 4), (3, 5)))) == frozenset({2})
