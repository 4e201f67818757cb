"""Triangle partition and packing on interval graphs.

All algorithms work on the consecutive clique arrangement, stored as a list
of vertex bitmasks.  Removing vertices keeps the arrangement consecutive;
the maximal cliques of the smaller graph are the maximal members of the
shrunken list, and in a consecutive arrangement a clique can only be
contained in a neighbouring one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .errors import InstanceTooLarge
from .graph import (
    TRIANGLE,
    CliqueArrangement,
    Graph,
    IntervalModel,
    Packing,
    consecutive_arrangement,
    graph_from_intervals,
)
from .oracle import OracleResult

log = logging.getLogger(__name__)

PACKING = "packing"
PARTITION = "partition"
EXP_BOUND = 45


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _normalize(cliques: list[int], removed: int) -> list[int]:
    """Drop ``removed`` from every clique, then discard non-maximal cliques
    and cliques with fewer than three vertices."""
    stack: list[int] = []
    for c in cliques:
        c &= ~removed
        if not c:
            continue
        if stack and c & ~stack[-1] == 0:
            continue
        while stack and stack[-1] & ~c == 0:
            stack.pop()
        stack.append(c)
    return [c for c in stack if _popcount(c) >= 3]


def _smallest_three(cliques: list[int]) -> list[int]:
    """Up to three vertices of ``C_1`` in order of increasing right endpoint
    (last clique index), ties by vertex id."""
    order: list[int] = []
    cur = cliques[0]
    j = 1
    while cur and len(order) < 3:
        nxt = cur & cliques[j] if j < len(cliques) else 0
        order.extend(_bits(cur & ~nxt))
        cur = nxt
        j += 1
    return order[:3]


def _arrangement(model: IntervalModel | CliqueArrangement) -> CliqueArrangement:
    if isinstance(model, IntervalModel):
        return consecutive_arrangement(model)
    return model


def _n_of(model: IntervalModel | CliqueArrangement) -> int:
    if isinstance(model, IntervalModel):
        return model.n
    return max(model.vertices, default=0)


@dataclass(frozen=True)
class ReducedInstance:
    graph: Graph
    arrangement: CliqueArrangement
    removed_isolated: tuple[int, ...]
    deleted_bridges: tuple[tuple[int, int], ...]


def reduce_small_cliques(
    model: IntervalModel | CliqueArrangement, mode: str = PACKING
) -> ReducedInstance | None:
    """Remove isolated vertices and delete bridge cliques until every maximal
    clique has at least three vertices.

    Returns None in partition mode when a vertex is left that no triangle can
    cover.  The reduced graph keeps the original vertex ids (and ``n``).
    """
    if mode not in (PACKING, PARTITION):
        raise ValueError(f"unknown mode {mode!r}")
    arr = _arrangement(model)
    n = _n_of(model)
    isolated: list[int] = []
    bridges: list[tuple[int, int]] = []
    cliques = list(arr.cliques)
    present = set(arr.vertices)
    while True:
        small = [c for c in cliques if len(c) <= 2]
        if not small:
            break
        for c in small:
            if len(c) == 2:
                bridges.append(tuple(sorted(c)))
        cliques = [c for c in cliques if len(c) > 2]
        still = set().union(*cliques) if cliques else set()
        gone = sorted(present - still)
        isolated.extend(gone)
        present = still
    if mode == PARTITION and isolated:
        return None
    reduced = CliqueArrangement(tuple(cliques))
    g = Graph.from_edges(n, reduced.edges())
    return ReducedInstance(g, reduced, tuple(isolated), tuple(bridges))


def triangle_partition_interval(model: IntervalModel | CliqueArrangement) -> Packing | None:
    """Greedy triangle partition: the three smallest vertices of the first
    clique (by right endpoint) form a triangle of some partition, if any
    partition exists."""
    arr = _arrangement(model)
    n = _n_of(model)
    remaining = _mask(range(1, n + 1))
    cliques = [_mask(c) for c in arr.cliques]
    taken = 0
    triangles = []
    while True:
        cliques = _normalize(cliques, taken)
        covered = 0
        for c in cliques:
            covered |= c
        if covered != remaining:
            return None
        if not remaining:
            return Packing(TRIANGLE, tuple(triangles))
        tri = _smallest_three(cliques)
        if len(tri) < 3:
            return None
        triangles.append(tuple(tri))
        taken = _mask(tri)
        remaining &= ~taken


def triangle_packing_interval_exp(
    model: IntervalModel | CliqueArrangement, *, allow_large: bool = False
) -> OracleResult:
    """Exact maximum triangle packing in O*(1.4656^n).

    The smallest vertex of ``C_1`` is either left uncovered or joins the next
    two smallest vertices of ``C_1``; the reductions run at every node.
    """
    n = _n_of(model)
    if n > EXP_BOUND and not allow_large:
        raise InstanceTooLarge(f"n={n} exceeds the branching solver bound {EXP_BOUND}")
    arr = _arrangement(model)
    nodes = 0

    def rec(cliques: list[int], removed: int) -> tuple[int, list[tuple[int, ...]]]:
        nonlocal nodes
        nodes += 1
        cliques = _normalize(cliques, removed)
        if not cliques:
            return 0, []
        tri = _smallest_three(cliques)
        alpha = tri[0]
        skip_val, skip_tris = rec(cliques, 1 << alpha)
        take_val, take_tris = rec(cliques, _mask(tri))
        if take_val + 1 > skip_val:
            return take_val + 1, [tuple(tri)] + take_tris
        return skip_val, skip_tris

    size, tris = rec([_mask(c) for c in arr.cliques], 0)
    return OracleResult(size, Packing(TRIANGLE, tuple(tris)), nodes)


# ---------------------------------------------------------------------------
# disjoint maximal cliques / clique transversal


class CliqueTransversal(NamedTuple):
    count: int
    transversal: frozenset[int]
    cliques: tuple[frozenset[int], ...]


def helper_model(model: IntervalModel) -> tuple[IntervalModel, CliqueArrangement]:
    """Interval model of H: the original intervals (scaled by 3) plus one
    short interval per maximal clique, placed where only that clique is
    active.  Helper ``i`` gets vertex id ``n + i``."""
    events = []
    for v, (l, r) in enumerate(model.intervals, start=1):
        events.append((l, 0, v))
        events.append((r, 1, v))
    events.sort()
    ivs = [(3 * l, 3 * r) for l, r in model.intervals]
    cliques = []
    active: set[int] = set()
    last_left = None
    for pos, is_right, v in events:
        if is_right:
            if last_left is not None:
                cliques.append(frozenset(active))
                ivs.append((3 * last_left + 1, 3 * last_left + 2))
                last_left = None
            active.discard(v)
        else:
            active.add(v)
            last_left = pos
    return IntervalModel(tuple(ivs)), CliqueArrangement(tuple(cliques))


def min_dominating_set_interval(model: IntervalModel) -> list[int]:
    """Minimum dominating set of an interval graph.

    Scan by right endpoint; for the first undominated vertex pick the closed
    neighbour reaching furthest right.
    """
    g = graph_from_intervals(model)
    right = {v: r for v, (_, r) in enumerate(model.intervals, start=1)}
    dominated: set[int] = set()
    chosen: list[int] = []
    for u in sorted(g.vertices, key=lambda v: right[v]):
        if u in dominated:
            continue
        w = max(g.adj[u] | {u}, key=lambda x: (right[x], -x))
        chosen.append(w)
        dominated |= g.adj[w] | {w}
    return chosen


def min_dominating_set_exact(g: Graph) -> frozenset[int]:
    for k in range(g.n + 1):
        for cand in combinations(g.vertices, k):
            dom = set(cand)
            for v in cand:
                dom |= g.adj[v]
            if len(dom) == g.n:
                return frozenset(cand)
    raise AssertionError("unreachable")


def greedy_disjoint_cliques(arr: CliqueArrangement) -> list[frozenset[int]]:
    """Left-to-right selection of pairwise disjoint arrangement cliques."""
    out: list[frozenset[int]] = []
    for c in arr.cliques:
        if not out or not (out[-1] & c):
            out.append(c)
    return out


def _exhaustive_disjoint_cliques(arr: CliqueArrangement) -> list[frozenset[int]]:
    cl = arr.cliques
    for k in range(len(cl), 0, -1):
        for pick in combinations(cl, k):
            if sum(len(c) for c in pick) == len(frozenset().union(*pick)):
                return list(pick)
    return []


def max_disjoint_maximal_cliques(model: IntervalModel) -> CliqueTransversal:
    """Maximum number of vertex-disjoint maximal cliques, with a minimum
    clique transversal of the same size as certificate.

    A dominating set of H (one extra vertex per maximal clique) is computed
    and helper vertices are swapped for a member of their clique.
    """
    h, arr = helper_model(model)
    n = model.n
    dom = min_dominating_set_interval(h)
    transversal = set()
    for v in dom:
        if v > n:
            transversal.add(min(arr.cliques[v - n - 1]))
        else:
            transversal.add(v)
    count = len(dom)
    cliques = greedy_disjoint_cliques(arr)
    if len(cliques) != count:
        log.warning("greedy clique selection gave %d, expected %d for %s", len(cliques), count, model)
        cliques = _exhaustive_disjoint_cliques(arr)
    return CliqueTransversal(count, frozenset(transversal), tuple(cliques))
