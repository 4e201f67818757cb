import logging
import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tripack.cobipartite import (
    CobipartiteModel,
    divergence,
    paper_characterization,
    stars_structure_check,
    triangle_partition_cobipartite,
)
from tripack.errors import InvalidModel
from tripack.gen import GenConfig, gen_cobipartite
from tripack.graph import is_partition
from tripack.oracle import pattern_partition_exact

# |A| = 4, |B| = 2, B-centred stars b1 -> {a1, a2}, b2 -> {a3, a4}
WITNESS = CobipartiteModel((1, 2, 3, 4), (5, 6), frozenset({(1, 5), (2, 5), (3, 6), (4, 6)}))


def model(na, nb, cross):
    return CobipartiteModel(tuple(range(1, na + 1)), tuple(range(na + 1, na + nb + 1)), frozenset(cross))


def all_models(na, nb):
    pairs = [(a, b) for a in range(1, na + 1) for b in range(na + 1, na + nb + 1)]
    for bits in product((0, 1), repeat=len(pairs)):
        yield model(na, nb, [p for p, bit in zip(pairs, bits) if bit])


class TestPublishedCriterion:
    def test_case_i(self):
        assert paper_characterization(model(3, 3, []))

    def test_case_ii(self):
        assert paper_characterization(model(1, 2, [(1, 2), (1, 3)]))

    def test_no_case(self):
        assert not paper_characterization(model(2, 2, [(1, 3), (2, 4)]))


class TestStars:
    def test_no_cross(self):
        assert stars_structure_check(model(2, 2, []))

    def test_a_with_two_b(self):
        assert not stars_structure_check(model(1, 2, [(1, 2), (1, 3)]))

    def test_two_b_stars(self):
        assert stars_structure_check(WITNESS)


class TestExact:
    def test_examples(self):
        p = triangle_partition_cobipartite(model(3, 3, []))
        assert p is not None and len(p) == 2
        p = triangle_partition_cobipartite(model(1, 2, [(1, 2), (1, 3)]))
        assert p.groups == ((1, 2, 3),)

    def test_witness_divergence(self, caplog):
        g = WITNESS.graph
        assert pattern_partition_exact(g) is not None
        p = triangle_partition_cobipartite(WITNESS)
        assert p is not None and is_partition(g, p)
        assert set(p.groups) == {(1, 2, 5), (3, 4, 6)}
        assert not paper_characterization(WITNESS)
        with caplog.at_level(logging.WARNING):
            assert divergence(WITNESS) == (False, True)
        assert "diverges" in caplog.text

    def test_bad_model(self):
        with pytest.raises(InvalidModel):
            CobipartiteModel((1, 2), (3,), frozenset({(1, 2)}))

    @pytest.mark.parametrize("na,nb", [(a, b) for a in range(4) for b in range(4) if a + b])
    def test_exhaustive_small(self, na, nb):
        for m in all_models(na, nb):
            got = triangle_partition_cobipartite(m)
            want = pattern_partition_exact(m.graph)
            assert (got is None) == (want is None), m
            if got is not None:
                assert is_partition(m.graph, got)
            # on the smallest models the published criterion is still right
            assert divergence(m) is None

    @settings(max_examples=300)
    @given(st.integers(1, 14), st.integers(0, 2**32))
    def test_random(self, n, seed):
        m = gen_cobipartite(GenConfig(seed=seed, n=n))
        got = triangle_partition_cobipartite(m)
        assert (got is None) == (pattern_partition_exact(m.graph) is None)
        if got is not None:
            assert is_partition(m.graph, got)

    def test_at_most_two_cross_triangles_per_shape(self):
        rng = random.Random(8)
        for _ in range(200):
            m = gen_cobipartite(GenConfig(seed=rng.randrange(2**32), n=rng.randint(3, 14)))
            p = triangle_partition_cobipartite(m)
            if p is None:
                continue
            A = set(m.A)
            shapes = [sum(v in A for v in t) for t in p.groups]
            assert shapes.count(1) <= 2 and shapes.count(2) <= 2
