"""Seeded instance generators, one per graph class.

Every generator is a pure function of its GenConfig: the same config gives
the same instance.  Generators aim for variety, not uniform sampling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .cobipartite import CobipartiteModel
from .colored_perm import ColoredPermutation
from .copartite import CoPartiteModel
from .dh import DHTree, dh_tree_from_construction
from .graph import BipartiteStrongModel, Graph, IntervalModel, PermutationModel
from .modular import ModularTree, is_prime_graph, modular_decomposition
from .multipartite import MultipartiteSpec
from .reduction import ThreeDMInstance

DH_OPS = ("pendant", "truetwin", "falsetwin")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    n: int = 10
    planted: bool = False
    p: float | None = None  # edge probability where it applies
    m: int | None = None  # triple count for 3DM

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _prob(cfg: GenConfig, rng: random.Random) -> float:
    return rng.random() if cfg.p is None else cfg.p


def _composition(rng: random.Random, total: int, parts: int) -> list[int]:
    """Random split of ``total`` into ``parts`` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1))
    bounds = [0, *cuts, total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def gen_interval(cfg: GenConfig) -> IntervalModel:
    rng = cfg.rng()
    ends = list(range(1, 2 * cfg.n + 1))
    rng.shuffle(ends)
    return IntervalModel(tuple(tuple(sorted(ends[2 * i:2 * i + 2])) for i in range(cfg.n)))


def gen_permutation(cfg: GenConfig) -> PermutationModel:
    rng = cfg.rng()
    pi = list(range(1, cfg.n + 1))
    rng.shuffle(pi)
    return PermutationModel(tuple(pi))


def gen_bipperm(cfg: GenConfig, nx: int | None = None, p_empty: float = 0.05) -> BipartiteStrongModel:
    """Staircase model: each x sees a contiguous run of Y whose ends never move left."""
    rng = cfg.rng()
    nx = rng.randint(0, cfg.n) if nx is None else nx
    ny = cfg.n - nx
    X = tuple(range(1, nx + 1))
    Y = tuple(range(nx + 1, cfg.n + 1))
    edges = set()
    lo, hi = 0, -1
    for x in X:
        if not ny or rng.random() < p_empty:
            continue
        lo = min(lo + rng.choice((0, 0, 1, 1, 2)), ny - 1)
        hi = min(max(hi, lo + rng.randint(0, 3)), ny - 1)
        edges.update((x, Y[j]) for j in range(lo, hi + 1))
    return BipartiteStrongModel(X, Y, frozenset(edges))


def gen_dh_steps(cfg: GenConfig) -> list[tuple]:
    rng = cfg.rng()
    steps: list[tuple] = [("start",)]
    for w in range(2, cfg.n + 1):
        steps.append((rng.choice(DH_OPS), rng.randint(1, w - 1)))
    return steps


def gen_dh(cfg: GenConfig) -> tuple[Graph, DHTree]:
    return dh_tree_from_construction(gen_dh_steps(cfg))


def _prime_graph(rng: random.Random, m: int) -> list[tuple[int, int]]:
    while True:
        edges = [e for e in combinations(range(1, m + 1), 2) if rng.random() < 0.5]
        if is_prime_graph(Graph.from_edges(m, edges)):
            return edges


def gen_modular(cfg: GenConfig, k: int) -> tuple[Graph, ModularTree]:
    """Random graph whose prime nodes have at most k children (k < 4: a cograph)."""
    rng = cfg.rng()
    labels = list(range(1, cfg.n + 1))
    rng.shuffle(labels)
    edges: list[tuple[int, int]] = []

    def build(vs: list[int]) -> None:
        if len(vs) == 1:
            return
        if k >= 4 and len(vs) >= 4 and rng.random() < 0.4:
            m = rng.randint(4, min(k, len(vs)))
            quotient = _prime_graph(rng, m)
        else:
            m = rng.randint(2, min(4, len(vs)))
            quotient = list(combinations(range(1, m + 1), 2)) if rng.random() < 0.5 else []
        sizes = _composition(rng, len(vs), m)
        parts, pos = [], 0
        for s in sizes:
            parts.append(vs[pos:pos + s])
            pos += s
        for i, j in quotient:
            edges.extend((u, v) for u in parts[i - 1] for v in parts[j - 1])
        for part in parts:
            build(part)

    build(labels)
    g = Graph.from_edges(cfg.n, edges)
    return g, modular_decomposition(g)


def gen_cobipartite(cfg: GenConfig, na: int | None = None) -> CobipartiteModel:
    rng = cfg.rng()
    na = rng.randint(0, cfg.n) if na is None else na
    p = _prob(cfg, rng)
    A = tuple(range(1, na + 1))
    B = tuple(range(na + 1, cfg.n + 1))
    cross = frozenset((a, b) for a in A for b in B if rng.random() < p)
    return CobipartiteModel(A, B, cross)


def gen_copartite(cfg: GenConfig, k: int) -> CoPartiteModel:
    rng = cfg.rng()
    if not 1 <= k <= cfg.n:
        raise ValueError("need 1 <= k <= n")
    p = _prob(cfg, rng)
    verts = list(range(1, cfg.n + 1))
    rng.shuffle(verts)
    classes, pos = [], 0
    for s in _composition(rng, cfg.n, k):
        classes.append(tuple(sorted(verts[pos:pos + s])))
        pos += s
    cls = {v: i for i, c in enumerate(classes) for v in c}
    edges = [(u, v) for u, v in combinations(range(1, cfg.n + 1), 2) if cls[u] == cls[v] or rng.random() < p]
    return CoPartiteModel(Graph.from_edges(cfg.n, edges), tuple(classes))


def gen_multipartite(cfg: GenConfig, t: int | None = None) -> MultipartiteSpec:
    rng = cfg.rng()
    t = rng.randint(1, cfg.n) if t is None else t
    return MultipartiteSpec(tuple(_composition(rng, cfg.n, t)))


def gen_colored_perm(cfg: GenConfig, r: int = 3) -> ColoredPermutation:
    """Colored permutation with equal color classes; n must be a multiple of r.

    In planted mode the positions split into increasing r-tuples colored
    1..r from left to right, so a colored partition exists.
    """
    rng = cfg.rng()
    if cfg.n % r:
        raise ValueError(f"n={cfg.n} is not a multiple of r={r}")
    k = cfg.n // r
    if not cfg.planted:
        pi = list(range(1, cfg.n + 1))
        rng.shuffle(pi)
        colors = [c for c in range(1, r + 1) for _ in range(k)]
        rng.shuffle(colors)
        return ColoredPermutation(PermutationModel(tuple(pi)), tuple(colors), r)
    positions = list(range(1, cfg.n + 1))
    values = list(range(1, cfg.n + 1))
    rng.shuffle(positions)
    rng.shuffle(values)
    pi = [0] * cfg.n
    colors = [0] * cfg.n
    for t in range(k):
        ps = sorted(positions[t * r:(t + 1) * r])
        vs = sorted(values[t * r:(t + 1) * r])
        for c, (p, v) in enumerate(zip(ps, vs), start=1):
            pi[p - 1] = v
            colors[v - 1] = c
    return ColoredPermutation(PermutationModel(tuple(pi)), tuple(colors), r)


def gen_3dm_with_solution(cfg: GenConfig) -> tuple[ThreeDMInstance, list[tuple[int, int, int]] | None]:
    """3DM instance on q = cfg.n; planted mode returns the embedded matching."""
    rng = cfg.rng()
    q = cfg.n
    total = cfg.m if cfg.m is not None else q + rng.randint(0, q)
    triples: list[tuple[int, int, int]] = []
    planted = None
    if cfg.planted:
        ys = list(range(1, q + 1))
        zs = list(range(1, q + 1))
        rng.shuffle(ys)
        rng.shuffle(zs)
        planted = [(i + 1, ys[i], zs[i]) for i in range(q)]
        triples += planted
    total = min(max(total, len(triples)), q**3)
    while len(triples) < total:
        t = (rng.randint(1, q), rng.randint(1, q), rng.randint(1, q))
        if t not in triples:
            triples.append(t)
    rng.shuffle(triples)
    return ThreeDMInstance(q, tuple(triples)), planted


def gen_3dm(cfg: GenConfig) -> ThreeDMInstance:
    return gen_3dm_with_solution(cfg)[0]
