"""Exact exponential-time packing solvers used as ground truth.

The search branches on the lowest-indexed undecided vertex: it is either
covered by one of the candidate groups whose smallest vertex it is (tried
in lexicographic order) or left uncovered.  Because of that fixed order the
reported witness and node count are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Sequence

from .errors import InstanceTooLarge
from .graph import (
    KR,
    SQUARE,
    TRIANGLE,
    Graph,
    IntervalModel,
    Packing,
    PermutationModel,
    consecutive_arrangement,
    contains_c4,
    graph_from_permutation,
)

DEFAULT_BOUND = {TRIANGLE: 16, KR: 16, SQUARE: 18}
MEMO_LIMIT = 24


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: Packing
    nodes_explored: int


def _group_size(kind: str, r: int) -> int:
    return {TRIANGLE: 3, SQUARE: 4}.get(kind, r)


def candidate_groups(g: Graph, kind: str, r: int = 3) -> list[tuple[int, ...]]:
    """All vertex sets inducing the pattern, as sorted tuples in lex order."""
    if kind == SQUARE:
        return [q for q in combinations(g.vertices, 4) if contains_c4(g, q)]
    size = _group_size(kind, r)
    masks = g.masks
    out: list[tuple[int, ...]] = []

    def extend(clique: list[int], cand: int) -> None:
        if len(clique) == size:
            out.append(tuple(clique))
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            clique.append(v)
            # only larger neighbours keep the tuple sorted
            extend(clique, cand & masks[v])
            clique.pop()

    for v in g.vertices:
        higher = masks[v] & ~((1 << (v + 1)) - 1)
        extend([v], higher)
    return out


def _check_size(g: Graph, kind: str, allow_large: bool, bound: int | None) -> None:
    limit = DEFAULT_BOUND[kind] if bound is None else bound
    if g.n > limit and not allow_large:
        raise InstanceTooLarge(f"n={g.n} exceeds the {kind} oracle bound {limit}")


class _SetPacker:
    """Maximum packing of candidate groups (bitmasks) over vertices ``1..n``."""

    def __init__(self, n: int, groups: Sequence[tuple[int, ...]]):
        self.n = n
        self.by_min: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(n + 1)]
        for grp in sorted(groups):
            mask = 0
            for v in grp:
                mask |= 1 << v
            self.by_min[min(grp)].append((mask, tuple(grp)))
        self.size = len(groups[0]) if groups else 3
        self.nodes = 0

    # plain branch and bound (default)
    def maximum(self) -> list[tuple[int, ...]]:
        best: list[list[tuple[int, ...]]] = [[]]
        chosen: list[tuple[int, ...]] = []
        size = self.size
        by_min = self.by_min

        def rec(avail: int) -> None:
            self.nodes += 1
            if len(chosen) > len(best[0]):
                best[0] = list(chosen)
            if len(chosen) + bin(avail).count("1") // size <= len(best[0]):
                return
            low = avail & -avail
            v = low.bit_length() - 1
            for mask, grp in by_min[v]:
                if mask & avail == mask:
                    chosen.append(grp)
                    rec(avail & ~mask)
                    chosen.pop()
            rec(avail & ~low)

        rec(self._all())
        return best[0]

    def maximum_memo(self) -> list[tuple[int, ...]]:
        memo: dict[int, tuple[int, int]] = {}
        by_min = self.by_min

        def value(avail: int) -> int:
            if not avail:
                return 0
            hit = memo.get(avail)
            if hit is not None:
                return hit[0]
            self.nodes += 1
            low = avail & -avail
            v = low.bit_length() - 1
            best, pick = -1, -1
            for idx, (mask, _) in enumerate(by_min[v]):
                if mask & avail == mask:
                    val = 1 + value(avail & ~mask)
                    if val > best:
                        best, pick = val, idx
            val = value(avail & ~low)
            if val > best:
                best, pick = val, -1
            memo[avail] = (best, pick)
            return best

        avail = self._all()
        value(avail)
        out = []
        while avail:
            _, pick = memo[avail]
            low = avail & -avail
            if pick < 0:
                avail &= ~low
            else:
                mask, grp = by_min[low.bit_length() - 1][pick]
                out.append(grp)
                avail &= ~mask
        return out

    def partition(self) -> list[tuple[int, ...]] | None:
        chosen: list[tuple[int, ...]] = []
        by_min = self.by_min

        def rec(avail: int) -> bool:
            self.nodes += 1
            if not avail:
                return True
            low = avail & -avail
            v = low.bit_length() - 1
            for mask, grp in by_min[v]:
                if mask & avail == mask:
                    chosen.append(grp)
                    if rec(avail & ~mask):
                        return True
                    chosen.pop()
            return False

        if self.n % self.size:
            self.nodes = 1
            return None
        return list(chosen) if rec(self._all()) else None

    def _all(self) -> int:
        return ((1 << (self.n + 1)) - 1) & ~1


def max_set_packing(
    n: int, groups: Sequence[tuple[int, ...]], memo: bool = False
) -> tuple[list[tuple[int, ...]], int]:
    """Maximum number of pairwise disjoint groups; returns (groups, nodes)."""
    packer = _SetPacker(n, groups)
    if not groups:
        return [], 1
    chosen = packer.maximum_memo() if memo else packer.maximum()
    return chosen, packer.nodes


def max_pattern_packing_exact(
    g: Graph,
    kind: str = TRIANGLE,
    r: int = 3,
    *,
    memo: bool = False,
    allow_large: bool = False,
    bound: int | None = None,
    groups: Iterable[tuple[int, ...]] | None = None,
) -> OracleResult:
    """Exact maximum vertex-disjoint packing of triangles, squares or K_r.

    ``groups`` restricts the candidate set (used by exchange checks).
    """
    _check_size(g, kind, allow_large, bound)
    if memo and g.n > MEMO_LIMIT and not allow_large:
        raise InstanceTooLarge(f"memoized search is limited to n <= {MEMO_LIMIT}")
    cand = candidate_groups(g, kind, r) if groups is None else sorted(tuple(sorted(x)) for x in groups)
    chosen, nodes = max_set_packing(g.n, cand, memo=memo)
    return OracleResult(len(chosen), Packing(kind, tuple(chosen), r), nodes)


def pattern_partition_exact(
    g: Graph, kind: str = TRIANGLE, r: int = 3, *, allow_large: bool = False, bound: int | None = None
) -> Packing | None:
    """A partition of all vertices into pattern groups, or None if none exists."""
    _check_size(g, kind, allow_large, bound)
    size = _group_size(kind, r)
    if g.n % size:
        return None
    packer = _SetPacker(g.n, candidate_groups(g, kind, r))
    packer.size = size
    chosen = packer.partition()
    return None if chosen is None else Packing(kind, tuple(chosen), r)


def count_partitionable_permutations(n_triples: int, allow_slow: bool = False) -> int:
    """Number of permutations of ``1..3k`` splitting into increasing triples."""
    if n_triples < 0:
        raise ValueError("n_triples must be non-negative")
    if n_triples > 4 or (n_triples == 4 and not allow_slow):
        raise InstanceTooLarge(f"n_triples={n_triples} is beyond the exhaustive range")
    n = 3 * n_triples
    count = 0
    for pi in permutations(range(1, n + 1)):
        g = graph_from_permutation(PermutationModel(pi))
        if pattern_partition_exact(g, TRIANGLE) is not None:
            count += 1
    return count


def partitionable_lower_bound(n_triples: int) -> int:
    """(3k)! / 6^k, the count of permutations built from k interleaved sorted triples."""
    return factorial(3 * n_triples) // 6**n_triples


def min_clique_transversal_exact(model: IntervalModel, allow_large: bool = False) -> frozenset[int]:
    """Smallest vertex set meeting every maximal clique, by subsets of increasing size."""
    if model.n > 16 and not allow_large:
        raise InstanceTooLarge(f"n={model.n} exceeds the transversal oracle bound 16")
    cliques = consecutive_arrangement(model).cliques
    vs = sorted({v for c in cliques for v in c})
    for k in range(len(vs) + 1):
        for cand in combinations(vs, k):
            s = set(cand)
            if all(c & s for c in cliques):
                return frozenset(s)
    raise AssertionError("unreachable: the full vertex set is a transversal")
