"""Partition of a colored permutation into increasing, color-ordered tuples.

Positions are the vertices.  A tuple of positions ``i_1 < ... < i_r`` is
admissible when ``pi(i_1) < ... < pi(i_r)`` and the value at ``i_c`` has
color ``c``.  A partition exists iff each of the ``r - 1`` chain bipartite
graphs (color ``c`` against color ``c + 1``) has a perfect matching; the
matchings compose into tuples because both orders are transitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from .errors import InvalidModel
from .graph import KR, TRIANGLE, Packing, PermutationModel


@dataclass(frozen=True)
class ColoredPermutation:
    """``colors[v - 1]`` is the color (``1..r``) of *value* ``v``."""

    model: PermutationModel
    colors: tuple[int, ...]
    r: int = 3

    def __post_init__(self) -> None:
        if len(self.colors) != self.model.n:
            raise InvalidModel("need one color per value")
        if self.r < 1 or any(not 1 <= c <= self.r for c in self.colors):
            raise InvalidModel(f"colors must lie in 1..{self.r}")

    @classmethod
    def from_position_colors(
        cls, model: PermutationModel, pos_colors: Sequence[int], r: int = 3
    ) -> "ColoredPermutation":
        """Build from colors attached to positions instead of values."""
        colors = [0] * model.n
        for i, v in enumerate(model.pi):
            colors[v - 1] = pos_colors[i]
        return cls(model, tuple(colors), r)

    @property
    def n(self) -> int:
        return self.model.n

    def color_at(self, pos: int) -> int:
        return self.colors[self.model.pi[pos - 1] - 1]

    def positions_of_color(self, c: int) -> list[int]:
        return [i for i in range(1, self.n + 1) if self.color_at(i) == c]


@dataclass(frozen=True)
class ChainBipartite:
    level: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset[tuple[int, int]]


def build_chain_bipartite(cp: ColoredPermutation, level: int) -> ChainBipartite:
    """Positions of color ``level`` against color ``level + 1``; ``i ~ j`` iff
    ``i < j`` and ``pi(i) < pi(j)``."""
    if not 1 <= level < cp.r:
        raise ValueError(f"level must lie in 1..{cp.r - 1}")
    pi = cp.model.pi
    left = cp.positions_of_color(level)
    right = cp.positions_of_color(level + 1)
    edges = frozenset((i, j) for i in left for j in right if i < j and pi[i - 1] < pi[j - 1])
    return ChainBipartite(level, tuple(left), tuple(right), edges)


def max_bipartite_matching(b: ChainBipartite) -> dict[int, int]:
    """Maximum-cardinality matching as a left -> right map (Hopcroft-Karp)."""
    g = nx.Graph()
    left = [("L", v) for v in b.left]
    g.add_nodes_from(left)
    g.add_nodes_from(("R", v) for v in b.right)
    g.add_edges_from((("L", i), ("R", j)) for i, j in b.edges)
    m = nx.bipartite.hopcroft_karp_matching(g, top_nodes=left)
    return {u[1]: w[1] for u, w in m.items() if u[0] == "L"}


def colored_partition(cp: ColoredPermutation) -> Packing | None:
    """Partition into admissible r-tuples, or None if there is none."""
    n, r = cp.n, cp.r
    if n == 0:
        return Packing(KR, (), r)
    if n % r:
        return None
    classes = [cp.positions_of_color(c) for c in range(1, r + 1)]
    if any(len(cl) != n // r for cl in classes):
        return None
    matchings = []
    for level in range(1, r):
        m = max_bipartite_matching(build_chain_bipartite(cp, level))
        if len(m) != n // r:
            return None
        matchings.append(m)
    groups = []
    for start in classes[0]:
        tup = [start]
        for m in matchings:
            tup.append(m[tup[-1]])
        groups.append(tuple(tup))
    kind = TRIANGLE if r == 3 else KR
    return Packing(kind, tuple(groups), r)


def is_admissible(cp: ColoredPermutation, tup: Sequence[int]) -> bool:
    pi = cp.model.pi
    return (
        len(tup) == cp.r
        and all(a < b and pi[a - 1] < pi[b - 1] for a, b in zip(tup, tup[1:]))
        and all(cp.color_at(p) == c for c, p in enumerate(tup, start=1))
    )


def colored_partition_bruteforce(cp: ColoredPermutation) -> list[tuple[int, ...]] | None:
    """Exhaustive search: the smallest unused position must open a tuple."""
    n, r = cp.n, cp.r
    if n % r:
        return None
    pi = cp.model.pi
    color = [0] + [cp.color_at(i) for i in range(1, n + 1)]
    used = [False] * (n + 1)
    out: list[tuple[int, ...]] = []

    def extend(tup: list[int]) -> bool:
        if len(tup) == r:
            out.append(tuple(tup))
            if rec():
                return True
            out.pop()
            return False
        last = tup[-1]
        for j in range(last + 1, n + 1):
            if not used[j] and color[j] == len(tup) + 1 and pi[j - 1] > pi[last - 1]:
                used[j] = True
                tup.append(j)
                if extend(tup):
                    return True
                tup.pop()
                used[j] = False
        return False

    def rec() -> bool:
        first = next((i for i in range(1, n + 1) if not used[i]), None)
        if first is None:
            return True
        if color[first] != 1:
            return False
        used[first] = True
        ok = extend([first])
        if not ok:
            used[first] = False
        return ok

    return list(out) if rec() else None
