from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tripack.copartite import (
    CoPartiteModel,
    SearchStats,
    cross_triangles,
    exchange_normalize,
    is_monochromatic,
    shape_of,
    triangle_partition_co_kpartite,
)
from tripack.errors import InvalidModel
from tripack.gen import GenConfig, gen_copartite
from tripack.graph import Graph, is_partition
from tripack.oracle import pattern_partition_exact


def make(class_sizes, cross_edges=None):
    classes, nxt = [], 1
    for s in class_sizes:
        classes.append(tuple(range(nxt, nxt + s)))
        nxt += s
    cls = {v: i for i, c in enumerate(classes) for v in c}
    n = nxt - 1
    pairs = [(u, v) for u, v in combinations(range(1, n + 1), 2) if cls[u] != cls[v]]
    cross = pairs if cross_edges is None else cross_edges
    edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if cls[u] == cls[v]] + list(cross)
    return CoPartiteModel(Graph.from_edges(n, edges), tuple(classes))


def test_complete_classes_222():
    m = make((2, 2, 2))
    p = triangle_partition_co_kpartite(m)
    assert p is not None and is_partition(m.graph, p)


def test_333_monochromatic():
    m = make((3, 3, 3), [(1, 4), (2, 7)])
    p = triangle_partition_co_kpartite(m)
    cls = m.class_of()
    assert p is not None and all(is_monochromatic(t, cls) for t in p.groups)


def test_111_without_cross_edges():
    assert triangle_partition_co_kpartite(make((1, 1, 1), [])) is None


def test_classes_must_be_cliques():
    with pytest.raises(InvalidModel):
        CoPartiteModel(Graph.from_edges(3, [(1, 2)]), ((1, 2, 3),))


class TestExchange:
    def test_three_rainbow(self):
        m = make((3, 3, 3))
        cls = m.class_of()
        T = [(1, 4, 7), (2, 5, 8), (3, 6, 9)]
        out = exchange_normalize(T, m)
        assert all(is_monochromatic(t, cls) for t in out) and len(out) == 3

    def test_one_two_shape(self):
        m = make((3, 6))
        cls = m.class_of()
        T = [(1, 4, 5), (2, 6, 7), (3, 8, 9)]
        out = exchange_normalize(T, m)
        assert sorted(shape_of(t, cls) for t in out) == [(0, 0, 0), (1, 1, 1), (1, 1, 1)]

    def test_already_normal(self):
        m = make((3, 3, 3))
        T = [(1, 4, 7), (2, 5, 8)]
        assert exchange_normalize(T, m) == sorted(T)

    @settings(max_examples=100)
    @given(st.integers(0, 2**32))
    def test_normalized_partitions_stay_partitions(self, seed):
        m = gen_copartite(GenConfig(seed=seed, n=12, p=0.7), 3)
        p = pattern_partition_exact(m.graph)
        if p is None:
            return
        out = exchange_normalize(p.groups, m)
        cls = m.class_of()
        assert sorted(v for t in out for v in t) == list(m.graph.vertices)
        assert all(m.graph.is_clique(t) for t in out)
        counts = {}
        for t in out:
            if not is_monochromatic(t, cls):
                counts[shape_of(t, cls)] = counts.get(shape_of(t, cls), 0) + 1
        assert all(c <= 2 for c in counts.values())


def test_cross_triangles_grouped_by_shape():
    m = make((2, 2, 2))
    shapes = cross_triangles(m)
    assert set(shapes) == {(0, 0, 1), (0, 0, 2), (0, 1, 1), (0, 1, 2), (0, 2, 2), (1, 1, 2), (1, 2, 2)}
    assert len(shapes[(0, 1, 2)]) == 8


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4), st.integers(3, 15), st.integers(0, 2**32))
def test_matches_oracle(k, n, seed):
    if k > n:
        return
    m = gen_copartite(GenConfig(seed=seed, n=n), k)
    got = triangle_partition_co_kpartite(m)
    assert (got is None) == (pattern_partition_exact(m.graph) is None)
    if got is not None:
        assert is_partition(m.graph, got)


def test_unsound_cap_marks_uncertified():
    m = make((2, 2, 2))
    st_ = SearchStats()
    assert triangle_partition_co_kpartite(m, cap=0, stats=st_) is None
    assert not st_.certified
    st_ = SearchStats()
    assert triangle_partition_co_kpartite(m, stats=st_) is not None and st_.certified
