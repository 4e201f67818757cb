import pytest

from tripack.cobipartite import CobipartiteModel
from tripack.dh import validate_dh_tree
from tripack.gen import (
    GenConfig,
    gen_3dm,
    gen_3dm_with_solution,
    gen_bipperm,
    gen_cobipartite,
    gen_colored_perm,
    gen_copartite,
    gen_dh,
    gen_interval,
    gen_modular,
    gen_multipartite,
)
from tripack.graph import check_arrangement, check_strong_ordering, consecutive_arrangement, graph_from_intervals
from tripack.modular import is_k_modular, validate_modular_tree
from tripack.reduction import is_perfect_3dm

SEEDS = range(200)


def test_interval_examples():
    assert gen_interval(GenConfig(seed=1, n=1)).n == 1
    assert gen_interval(GenConfig(seed=7, n=5)) == gen_interval(GenConfig(seed=7, n=5))
    m = gen_interval(GenConfig(seed=7, n=10))
    assert check_arrangement(graph_from_intervals(m), consecutive_arrangement(m))


def test_bipperm_degenerate():
    m = gen_bipperm(GenConfig(seed=2, n=0))
    assert m.n == 0 and not m.edges
    m = gen_bipperm(GenConfig(seed=2, n=4), nx=0)
    assert m.X == () and not m.edges


def test_3dm_planted():
    inst, planted = gen_3dm_with_solution(GenConfig(seed=3, n=2, planted=True))
    assert is_perfect_3dm(inst, planted)
    assert gen_3dm(GenConfig(seed=3, n=2, planted=True)) == inst


@pytest.mark.parametrize("seed", SEEDS)
def test_every_generator_passes_its_validator(seed):
    n = 1 + seed % 14
    cfg = GenConfig(seed=seed, n=n)
    m = gen_interval(cfg)
    assert check_arrangement(graph_from_intervals(m), consecutive_arrangement(m))
    assert check_strong_ordering(gen_bipperm(cfg))
    g, t = gen_dh(cfg)
    assert validate_dh_tree(g, t)
    for k in (0, 4, 5):
        g, t = gen_modular(cfg, k)
        assert validate_modular_tree(g, t) and is_k_modular(t, k)
    assert isinstance(gen_cobipartite(cfg), CobipartiteModel)
    cm = gen_copartite(cfg, 1 + seed % n)
    assert all(cm.graph.is_clique(c) for c in cm.classes)
    assert gen_multipartite(cfg).n == n
    cp = gen_colored_perm(GenConfig(seed=seed, n=3 * (1 + seed % 4), planted=seed % 2 == 0), 3)
    assert [cp.colors.count(c) for c in (1, 2, 3)] == [cp.n // 3] * 3


def test_determinism():
    for fn in (gen_interval, gen_bipperm, gen_dh, gen_cobipartite, gen_multipartite):
        assert fn(GenConfig(seed=42, n=9)) == fn(GenConfig(seed=42, n=9))
    assert gen_modular(GenConfig(seed=42, n=9), 5) == gen_modular(GenConfig(seed=42, n=9), 5)


def test_colored_perm_needs_multiple_of_r():
    with pytest.raises(ValueError):
        gen_colored_perm(GenConfig(seed=1, n=7), 3)


@pytest.mark.slow
def test_ten_thousand_per_class():
    for seed in range(10_000):
        n = 1 + seed % 14
        cfg = GenConfig(seed=seed, n=n)
        m = gen_interval(cfg)
        assert check_arrangement(graph_from_intervals(m), consecutive_arrangement(m))
        assert check_strong_ordering(gen_bipperm(cfg))
        assert validate_dh_tree(*gen_dh(cfg))
        g, t = gen_modular(cfg, 5)
        assert validate_modular_tree(g, t) and is_k_modular(t, 5)
        cm = gen_copartite(cfg, 1 + seed % n)
        assert all(cm.graph.is_clique(c) for c in cm.classes)
