"""Greedy maximum C4 (square) packing on bipartite permutation graphs.

A square in a bipartite graph is a complete 2+2 biclique.  Given a strong
ordering, the greedy walks the merged top-line order: vertices lying in no
square are discarded, and the first remaining vertex is packed with its
first partner on the same side and the first two common neighbours.
"""

from __future__ import annotations

from .errors import InvalidModel
from .graph import SQUARE, BipartiteStrongModel, Packing, check_strong_ordering


def merged_order(model: BipartiteStrongModel) -> list[int]:
    """Top-line order: ``model.order`` if given, otherwise every x is placed
    just before the first vertex of its neighbourhood in <_2 (stable)."""
    if model.order is not None:
        return list(model.order)
    yidx = {y: j for j, y in enumerate(model.Y)}
    nbr: dict[int, list[int]] = {x: [] for x in model.X}
    for x, y in model.edges:
        nbr[x].append(yidx[y])
    keys = {}
    left = 0
    for i, x in enumerate(model.X):
        if nbr[x]:
            left = min(nbr[x])
        keys[x] = (left, 0, i)
    for j, y in enumerate(model.Y):
        keys[y] = (j, 1, j)
    return sorted(keys, key=keys.__getitem__)


class _Sides:
    def __init__(self, model: BipartiteStrongModel):
        self.X = set(model.X)
        self.rank = {v: i for i, v in enumerate(model.X)}
        self.rank.update({v: i for i, v in enumerate(model.Y)})
        self.order = {v: list(model.X) for v in model.X}
        self.order.update({v: list(model.Y) for v in model.Y})
        self.nbr: dict[int, set[int]] = {v: set() for v in model.X + model.Y}
        for x, y in model.edges:
            self.nbr[x].add(y)
            self.nbr[y].add(x)

    def partners(self, v: int, alive: set[int]) -> list[int]:
        """Same-side vertices sharing at least two live neighbours with ``v``,
        in side order."""
        nv = self.nbr[v] & alive
        if len(nv) < 2:
            return []
        return [u for u in self.order[v] if u != v and u in alive and len(self.nbr[u] & nv) >= 2]


def exists_square_containing(model: BipartiteStrongModel, v: int, alive: set[int] | None = None) -> bool:
    sides = _Sides(model)
    if alive is None:
        alive = set(model.X) | set(model.Y)
    return bool(sides.partners(v, alive))


def c4_packing_bipperm(model: BipartiteStrongModel, check: bool = True) -> Packing:
    """Maximum square packing of a bipartite permutation graph."""
    if check and not check_strong_ordering(model):
        raise InvalidModel("the orderings are not a strong ordering")
    sides = _Sides(model)
    order = merged_order(model)
    alive = set(order)
    squares = []
    for v in order:
        if v not in alive:
            continue
        partners = sides.partners(v, alive)
        if not partners:
            alive.discard(v)
            continue
        w = partners[0]
        common = sides.nbr[v] & sides.nbr[w] & alive
        a, b = sorted(common, key=sides.rank.__getitem__)[:2]
        quad = (v, w, a, b)
        squares.append(quad)
        alive.difference_update(quad)
    return Packing(SQUARE, tuple(squares))
