import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tripack.bipperm import c4_packing_bipperm, exists_square_containing, merged_order
from tripack.errors import InvalidModel
from tripack.gen import GenConfig, gen_bipperm
from tripack.graph import BipartiteStrongModel, check_strong_ordering, verify_packing
from tripack.oracle import max_pattern_packing_exact


def model(X, Y, edges):
    return BipartiteStrongModel(tuple(X), tuple(Y), frozenset(edges))


K22 = model((1, 2), (3, 4), {(1, 3), (1, 4), (2, 3), (2, 4)})
# P5: 1-4-2-5-3 with X = (1, 2, 3), Y = (4, 5)
P5 = model((1, 2, 3), (4, 5), {(1, 4), (2, 4), (2, 5), (3, 5)})


def staircases(nx_, ny):
    """All staircase models: intervals of Y with non-decreasing ends (or empty rows)."""
    spans = [None] + [(l, r) for l in range(ny) for r in range(l, ny)]

    def rec(i, lo, hi, rows):
        if i == nx_:
            yield rows
            return
        for s in spans:
            if s is None:
                yield from rec(i + 1, lo, hi, rows + [None])
            elif s[0] >= lo and s[1] >= hi:
                yield from rec(i + 1, s[0], s[1], rows + [s])

    X = list(range(1, nx_ + 1))
    Y = list(range(nx_ + 1, nx_ + ny + 1))
    for rows in rec(0, 0, 0, []):
        edges = {(X[i], Y[j]) for i, s in enumerate(rows) if s for j in range(s[0], s[1] + 1)}
        yield model(X, Y, edges)


def test_examples():
    assert len(c4_packing_bipperm(K22)) == 1
    assert len(c4_packing_bipperm(P5)) == 0


def test_consecutive_pairs_staircase():
    X, Y = (1, 2, 3, 4), (5, 6, 7, 8)
    edges = {(X[i], Y[j]) for i in range(4) for j in (i, i + 1) if j < 4}
    m = model(X, Y, edges)
    assert check_strong_ordering(m)
    assert len(c4_packing_bipperm(m)) == max_pattern_packing_exact(m.graph, "square").size


def test_exists_square_containing():
    assert all(exists_square_containing(K22, v) for v in (1, 2, 3, 4))
    assert not exists_square_containing(P5, 2)
    pend = model((1, 2, 5), (3, 4), {(1, 3), (1, 4), (2, 3), (2, 4), (5, 3)})
    assert not exists_square_containing(pend, 5)
    assert exists_square_containing(pend, 1)


def test_merged_order_is_permutation():
    m = gen_bipperm(GenConfig(seed=3, n=14))
    assert sorted(merged_order(m)) == list(range(1, 15))


def test_rejects_bad_ordering():
    c6 = model((1, 2, 3), (4, 5, 6), {(1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 4)})
    with pytest.raises(InvalidModel):
        c4_packing_bipperm(c6)


@pytest.mark.parametrize("nx_,ny", [(a, b) for a in range(7) for b in range(7) if a + b <= 8])
def test_exhaustive_staircases(nx_, ny):
    for m in staircases(nx_, ny):
        p = c4_packing_bipperm(m)
        assert verify_packing(m.graph, p)
        assert len(p) == max_pattern_packing_exact(m.graph, "square").size


@settings(max_examples=300)
@given(st.integers(0, 16), st.integers(0, 2**32))
def test_random_staircases(n, seed):
    m = gen_bipperm(GenConfig(seed=seed, n=n))
    assert check_strong_ordering(m)
    p = c4_packing_bipperm(m)
    assert verify_packing(m.graph, p)
    assert len(p) == max_pattern_packing_exact(m.graph, "square", memo=True).size


def test_every_square_is_a_biclique():
    m = gen_bipperm(GenConfig(seed=11, n=30))
    X = set(m.X)
    for grp in c4_packing_bipperm(m).groups:
        xs = [v for v in grp if v in X]
        ys = [v for v in grp if v not in X]
        assert len(xs) == len(ys) == 2
        assert all((x, y) in m.edges for x in xs for y in ys)
