"""Reduction from 3-dimensional matching to square packing in bipartite graphs.

Vertex layout of the gadget graph (q elements per side, P distinct (x, y)
pairs, |M| triples):

    x_i          -> i                    (1..q)
    y_i          -> q + i
    z_i          -> 2q + i
    v_xy         -> 3q + k               (k-th distinct pair, first-appearance order)
    a_t[1..4]    -> 3q + P + 4t + (1..4) (t-th triple, 0-based)

Per triple t = (x, y, z) the eight gadget edges are x-a1, y-a1, a1-a2, a2-a3,
a3-a4, a4-a1, z-a2, z-a4; each pair vertex joins its x and y.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidMatching, InvalidModel, MalformedPacking, NotAThresholdPacking
from .graph import SQUARE, Graph, Packing, verify_packing

log = logging.getLogger(__name__)

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class ThreeDMInstance:
    q: int
    triples: tuple[Triple, ...]

    def __post_init__(self) -> None:
        if self.q < 0:
            raise InvalidModel("q must be non-negative")
        if len(set(self.triples)) != len(self.triples):
            raise InvalidModel("triples must be distinct")
        for t in self.triples:
            if len(t) != 3 or any(not 1 <= c <= self.q for c in t):
                raise InvalidModel(f"triple {t} out of range 1..{self.q}")


@dataclass(frozen=True)
class GadgetGraph:
    instance: ThreeDMInstance
    graph: Graph
    pair_vertex: dict[tuple[int, int], int]
    gadgets: tuple[tuple[int, int, int, int], ...]
    roles: dict[int, str]

    @property
    def target(self) -> int:
        return self.instance.q + len(self.instance.triples)

    def x(self, i: int) -> int:
        return i

    def y(self, i: int) -> int:
        return self.instance.q + i

    def z(self, i: int) -> int:
        return 2 * self.instance.q + i

    def side_classes(self) -> tuple[frozenset[int], frozenset[int]]:
        """(X + Y + a2 + a4, Z + pair vertices + a1 + a3)."""
        q = self.instance.q
        s1 = set(range(1, 2 * q + 1))
        s2 = set(range(2 * q + 1, 3 * q + 1)) | set(self.pair_vertex.values())
        for a1, a2, a3, a4 in self.gadgets:
            s1 |= {a2, a4}
            s2 |= {a1, a3}
        return frozenset(s1), frozenset(s2)


def reduce(instance: ThreeDMInstance) -> GadgetGraph:
    q = instance.q
    pairs: dict[tuple[int, int], int] = {}
    for x, y, _ in instance.triples:
        if (x, y) not in pairs:
            pairs[(x, y)] = 3 * q + len(pairs) + 1
    base = 3 * q + len(pairs)
    roles = {}
    for i in range(1, q + 1):
        roles[i] = f"x{i}"
        roles[q + i] = f"y{i}"
        roles[2 * q + i] = f"z{i}"
    edges = []
    for (x, y), v in pairs.items():
        roles[v] = f"v{x}_{y}"
        edges += [(x, v), (q + y, v)]
    gadgets = []
    for t, (x, y, z) in enumerate(instance.triples):
        a1, a2, a3, a4 = (base + 4 * t + i for i in range(1, 5))
        for i, a in enumerate((a1, a2, a3, a4), start=1):
            roles[a] = f"a{t + 1}[{i}]"
        xv, yv, zv = x, q + y, 2 * q + z
        edges += [(xv, a1), (yv, a1), (a1, a2), (a2, a3), (a3, a4), (a4, a1), (zv, a2), (zv, a4)]
        gadgets.append((a1, a2, a3, a4))
    n = base + 4 * len(instance.triples)
    return GadgetGraph(instance, Graph.from_edges(n, edges), pairs, tuple(gadgets), roles)


def is_perfect_3dm(instance: ThreeDMInstance, matching) -> bool:
    matching = list(matching)
    if len(set(matching)) != len(matching) or len(matching) != instance.q:
        return False
    if any(t not in instance.triples for t in matching):
        return False
    return all(len({t[k] for t in matching}) == instance.q for k in range(3))


def solve_3dm_exhaustive(instance: ThreeDMInstance) -> list[Triple] | None:
    for pick in combinations(instance.triples, instance.q):
        if is_perfect_3dm(instance, pick):
            return list(pick)
    return None


def lift_solution(instance: ThreeDMInstance, matching, gadget: GadgetGraph | None = None) -> Packing:
    """Square packing of size q + |M| built from a perfect 3D matching."""
    matching = list(matching)
    if not is_perfect_3dm(instance, matching):
        raise InvalidMatching(f"{matching} is not a perfect 3-dimensional matching")
    gg = gadget or reduce(instance)
    chosen = set(matching)
    squares = []
    for t, (x, y, z) in enumerate(instance.triples):
        a1, a2, a3, a4 = gg.gadgets[t]
        if (x, y, z) in chosen:
            squares.append((gg.x(x), gg.pair_vertex[(x, y)], gg.y(y), a1))
            squares.append((a2, a3, a4, gg.z(z)))
        else:
            squares.append((a1, a2, a3, a4))
    return Packing(SQUARE, tuple(squares))


def extract_matching(instance: ThreeDMInstance, packing: Packing, gadget: GadgetGraph | None = None) -> list[Triple]:
    """Read a perfect 3D matching off a square packing of threshold size.

    Each gadget must be packed in one of the two canonical ways; anything
    else raises MalformedPacking.
    """
    gg = gadget or reduce(instance)
    if packing.kind != SQUARE or not verify_packing(gg.graph, packing):
        raise MalformedPacking("not a square packing of the gadget graph")
    if len(packing) < gg.target:
        raise NotAThresholdPacking(f"packing has {len(packing)} squares, threshold is {gg.target}")
    present = {frozenset(s) for s in packing.groups}
    out = []
    for t, (x, y, z) in enumerate(instance.triples):
        a1, a2, a3, a4 = gg.gadgets[t]
        covering = (
            frozenset((gg.x(x), gg.pair_vertex[(x, y)], gg.y(y), a1)) in present
            and frozenset((a2, a3, a4, gg.z(z))) in present
        )
        local = frozenset((a1, a2, a3, a4)) in present
        if covering:
            out.append((x, y, z))
        elif not local:
            log.error("gadget %d packed non-canonically: instance=%s packing=%s", t, instance, packing)
            raise MalformedPacking(f"gadget for triple {(x, y, z)} is packed in neither canonical way")
    if not is_perfect_3dm(instance, out):
        log.error("extracted triples are not a matching: instance=%s packing=%s", instance, packing)
        raise MalformedPacking(f"extracted triples {out} do not form a perfect matching")
    return out
