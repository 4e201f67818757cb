"""Triangle partition of cobipartite graphs (two cliques A, B plus cross edges).

Two deciders live here.  ``paper_characterization`` is the published
three-case criterion, implemented literally.  ``triangle_partition_cobipartite``
is the exact procedure; the two disagree on some inputs (for example
|A| = 4, |B| = 2 with two B-centred stars), and ``divergence`` reports those.

Cross triangles come in two shapes: AB2 (one A vertex seeing two B vertices)
and A2B (one B vertex seeing two A vertices).  Three disjoint cross
triangles of one shape can be traded for monochromatic ones, so it is
enough to look for at most two of each shape.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import InvalidModel
from .graph import TRIANGLE, Graph, Packing

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CobipartiteModel:
    A: tuple[int, ...]
    B: tuple[int, ...]
    cross: frozenset[tuple[int, int]]  # (a, b) pairs

    def __post_init__(self) -> None:
        sa, sb = set(self.A), set(self.B)
        if len(sa) != len(self.A) or len(sb) != len(self.B) or sa & sb:
            raise InvalidModel("A and B must be disjoint lists without repeats")
        if sa | sb != set(range(1, len(sa) + len(sb) + 1)):
            raise InvalidModel("A and B must together cover 1..n")
        for a, b in self.cross:
            if a not in sa or b not in sb:
                raise InvalidModel(f"cross edge ({a}, {b}) must join A to B")

    @property
    def n(self) -> int:
        return len(self.A) + len(self.B)

    @cached_property
    def graph(self) -> Graph:
        edges = list(combinations(self.A, 2)) + list(combinations(self.B, 2)) + list(self.cross)
        return Graph.from_edges(self.n, edges)

    @cached_property
    def cross_nbrs(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in self.A + self.B}
        for a, b in self.cross:
            out[a].add(b)
            out[b].add(a)
        return {v: frozenset(s) for v, s in out.items()}

    def cross_triangles(self) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
        """(AB2, A2B) triangles as (center, other, other) with sorted others."""
        nb = self.cross_nbrs
        ab2 = [(a, b1, b2) for a in sorted(self.A) for b1, b2 in combinations(sorted(nb[a]), 2)]
        a2b = [(b, a1, a2) for b in sorted(self.B) for a1, a2 in combinations(sorted(nb[b]), 2)]
        return ab2, a2b


def paper_characterization(model: CobipartiteModel) -> bool:
    """Published criterion: (i) both sides divisible by 3, or (ii)/(iii) sizes
    1 and 2 mod 3 with a cross triangle centred on the size-1 side."""
    ra, rb = len(model.A) % 3, len(model.B) % 3
    if ra == 0 and rb == 0:
        return True
    nb = model.cross_nbrs
    if ra == 1 and rb == 2:
        return any(len(nb[a]) >= 2 for a in model.A)
    if ra == 2 and rb == 1:
        return any(len(nb[b]) >= 2 for b in model.B)
    return False


def stars_structure_check(model: CobipartiteModel) -> bool:
    """True iff the cross graph is isolated A vertices plus stars centred in B,
    i.e. every A vertex has cross degree at most one."""
    return all(len(model.cross_nbrs[a]) <= 1 for a in model.A)


def _fill(vs: list[int]) -> list[tuple[int, ...]]:
    return [tuple(vs[i:i + 3]) for i in range(0, len(vs), 3)]


def triangle_partition_cobipartite(model: CobipartiteModel) -> Packing | None:
    """Exact decision with witness: at most two cross triangles of each shape,
    the rest filled with monochromatic triangles."""
    na, nb_ = len(model.A), len(model.B)
    if (na + nb_) % 3:
        return None
    ab2, a2b = model.cross_triangles()
    targets = [
        (x, y)
        for x in range(3)
        for y in range(3)
        if (na - x - 2 * y) % 3 == 0 and (nb_ - 2 * x - y) % 3 == 0
    ]
    targets.sort(key=lambda t: (t[0] + t[1], t))
    for x, y in targets:
        found = _realize(ab2, x, a2b, y)
        if found is not None:
            used = {v for tri in found for v in tri}
            rest_a = [v for v in sorted(model.A) if v not in used]
            rest_b = [v for v in sorted(model.B) if v not in used]
            groups = found + _fill(rest_a) + _fill(rest_b)
            return Packing(TRIANGLE, tuple(groups))
    return None


def _realize(ab2, x: int, a2b, y: int) -> list[tuple[int, int, int]] | None:
    """x disjoint AB2 triangles plus y disjoint A2B triangles, all disjoint."""
    plan = [ab2] * x + [a2b] * y
    chosen: list[tuple[int, int, int]] = []
    used: set[int] = set()

    def rec(step: int, start: int) -> bool:
        if step == len(plan):
            return True
        pool = plan[step]
        # same-shape picks go in increasing index order
        lo = start if step > 0 and plan[step - 1] is pool else 0
        for i in range(lo, len(pool)):
            tri = pool[i]
            if used.isdisjoint(tri):
                chosen.append(tri)
                used.update(tri)
                if rec(step + 1, i + 1):
                    return True
                chosen.pop()
                used.difference_update(tri)
        return False

    return list(chosen) if rec(0, 0) else None


def divergence(model: CobipartiteModel) -> tuple[bool, bool] | None:
    """(published answer, exact answer) when they differ; logs the instance."""
    lit = paper_characterization(model)
    exact = triangle_partition_cobipartite(model) is not None
    if lit != exact:
        log.warning(
            "cobipartite criterion diverges (published=%s, exact=%s): A=%s B=%s cross=%s",
            lit, exact, model.A, model.B, sorted(model.cross),
        )
        return lit, exact
    return None
