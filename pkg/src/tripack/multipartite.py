"""Greedy triangle partition and packing on complete multipartite graphs.

Every triangle of K(a_1, ..., a_t) takes one vertex from three distinct
classes, so the problem lives entirely on the class sizes.  Repeatedly
taking a triangle from three of the largest classes is optimal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidModel
from .graph import TRIANGLE, Graph, Packing, PermutationModel


@dataclass(frozen=True)
class MultipartiteSpec:
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.sizes or any(a < 1 for a in self.sizes):
            raise InvalidModel("class sizes must be positive and at least one class is needed")

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def classes(self) -> list[list[int]]:
        """Vertex ids of each class: class i holds the next a_i consecutive ids."""
        out, nxt = [], 1
        for a in self.sizes:
            out.append(list(range(nxt, nxt + a)))
            nxt += a
        return out

    def graph(self) -> Graph:
        cls = self.classes()
        return Graph.from_edges(
            self.n,
            ((u, v) for i in range(len(cls)) for j in range(i + 1, len(cls)) for u in cls[i] for v in cls[j]),
        )

    def block_permutation(self) -> PermutationModel:
        """Increasing blocks, each internally decreasing: its increasing-pair
        permutation graph is this complete multipartite graph."""
        pi, base = [], 0
        for a in self.sizes:
            pi.extend(range(base + a, base, -1))
            base += a
        return PermutationModel(tuple(pi))


def _greedy(sizes: tuple[int, ...]) -> tuple[list[tuple[int, int, int]], list[int]]:
    left = list(sizes)
    triples = []
    while True:
        live = [i for i, a in enumerate(left) if a > 0]
        if len(live) < 3:
            break
        # stable sort: ties go to the lowest index
        top = sorted(live, key=lambda i: -left[i])[:3]
        top.sort()
        for i in top:
            left[i] -= 1
        triples.append(tuple(top))
    return triples, left


def _vertex_packing(spec: MultipartiteSpec, triples) -> Packing:
    pools = [list(c) for c in spec.classes()]
    groups = [tuple(pools[i].pop() for i in tri) for tri in triples]
    return Packing(TRIANGLE, tuple(groups))


def triangle_partition_multipartite(spec: MultipartiteSpec) -> tuple[list[tuple[int, int, int]], Packing] | None:
    """Class-index triples (0-based) and the vertex-level partition, or None."""
    triples, left = _greedy(spec.sizes)
    if any(left):
        return None
    return triples, _vertex_packing(spec, triples)


def triangle_packing_multipartite(spec: MultipartiteSpec) -> tuple[int, list[tuple[int, int, int]], Packing]:
    triples, _ = _greedy(spec.sizes)
    return len(triples), triples, _vertex_packing(spec, triples)
