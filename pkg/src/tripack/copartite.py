"""Triangle partition on complements of k-partite graphs.

The classes A_1..A_k are cliques.  A partition consists of a set T of
non-monochromatic triangles plus monochromatic fill, and the fill works
exactly when every class keeps a multiple of three uncovered vertices.
Three triangles of the same shape (same class multiset) can always be
exchanged for monochromatic ones, so T needs at most two triangles per
shape; that bounds |T| by a constant depending on k only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidModel
from .graph import TRIANGLE, Graph, Packing

Shape = tuple[int, int, int]


@dataclass(frozen=True)
class CoPartiteModel:
    """``classes[i]`` lists the vertices of clique class i (0-based index)."""

    graph: Graph
    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = [v for c in self.classes for v in c]
        if sorted(seen) != list(self.graph.vertices):
            raise InvalidModel("classes must partition the vertex set")
        for c in self.classes:
            if not self.graph.is_clique(c):
                raise InvalidModel(f"class {c} does not induce a clique")

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_of(self) -> dict[int, int]:
        return {v: i for i, c in enumerate(self.classes) for v in c}


def shape_of(tri, cls: dict[int, int]) -> Shape:
    return tuple(sorted(cls[v] for v in tri))


def is_monochromatic(tri, cls: dict[int, int]) -> bool:
    a, b, c = (cls[v] for v in tri)
    return a == b == c


def cross_triangles(model: CoPartiteModel) -> dict[Shape, list[tuple[int, int, int]]]:
    """Non-monochromatic triangles grouped by shape, each list in lex order."""
    g = model.graph
    cls = model.class_of()
    out: dict[Shape, list[tuple[int, int, int]]] = {}
    for u, v in g.edges():
        for w in sorted(g.adj[u] & g.adj[v]):
            if w > v:
                tri = (u, v, w)
                if not is_monochromatic(tri, cls):
                    out.setdefault(shape_of(tri, cls), []).append(tri)
    for lst in out.values():
        lst.sort()
    return dict(sorted(out.items()))


def exchange_normalize(T, model: CoPartiteModel) -> list[tuple[int, ...]]:
    """Trade every three same-shape non-monochromatic triangles for
    monochromatic ones until at most two per shape remain."""
    cls = model.class_of()
    tris = sorted(tuple(sorted(t)) for t in T)
    while True:
        by_shape: dict[Shape, list[tuple[int, ...]]] = {}
        for t in tris:
            if not is_monochromatic(t, cls):
                by_shape.setdefault(shape_of(t, cls), []).append(t)
        heavy = next((s for s in sorted(by_shape) if len(by_shape[s]) >= 3), None)
        if heavy is None:
            return tris
        three = by_shape[heavy][:3]
        pooled: dict[int, list[int]] = {}
        for t in three:
            for v in t:
                pooled.setdefault(cls[v], []).append(v)
        fresh = []
        for c in sorted(pooled):
            vs = sorted(pooled[c])
            fresh += [tuple(vs[i:i + 3]) for i in range(0, len(vs), 3)]
        tris = sorted([t for t in tris if t not in three] + fresh)


@dataclass
class SearchStats:
    nodes: int = 0
    certified: bool = True


def triangle_partition_co_kpartite(
    model: CoPartiteModel, *, cap: int | None = None, stats: SearchStats | None = None
) -> Packing | None:
    """Partition into triangles, or None.

    ``cap`` limits |T| below the certified default; results found under a
    smaller cap are still correct, but a None under it is marked uncertified
    in ``stats``.
    """
    g, k = model.graph, model.k
    stats = stats if stats is not None else SearchStats()
    sound_cap = min(14 * k**3, g.n // 3)
    if cap is None:
        cap = sound_cap
    sizes = [len(c) for c in model.classes]
    shapes = cross_triangles(model)
    shape_list = list(shapes)
    contrib = []
    for s in shape_list:
        vec = [0] * k
        for c in s:
            vec[c] += 1
        contrib.append(tuple(vec))

    # residue vectors reachable from shape index i onward, ignoring disjointness
    reach: list[set[tuple[int, ...]]] = [set() for _ in range(len(shape_list) + 1)]
    reach[-1] = {tuple([0] * k)}
    for i in range(len(shape_list) - 1, -1, -1):
        nxt = reach[i + 1]
        for base in nxt:
            for c in range(3):
                reach[i].add(tuple((b + c * d) % 3 for b, d in zip(base, contrib[i])))

    failed: set[tuple[int, int]] = set()
    chosen: list[tuple[int, int, int]] = []
    used_per_class = [0] * k

    def deficit() -> tuple[int, ...]:
        return tuple((sizes[i] - used_per_class[i]) % 3 for i in range(k))

    def rec(si: int, mask: int, depth: int) -> bool:
        stats.nodes += 1
        need = deficit()
        if need not in reach[si]:
            return False
        if si == len(shape_list):
            return True
        key = (si, mask)
        if key in failed:
            return False
        tris = shapes[shape_list[si]]
        vec = contrib[si]

        def pick(count: int, start: int, mask: int, depth: int) -> bool:
            if count == 0:
                return rec(si + 1, mask, depth)
            if depth >= cap:
                return False
            for j in range(start, len(tris)):
                t = tris[j]
                tm = (1 << t[0]) | (1 << t[1]) | (1 << t[2])
                if mask & tm:
                    continue
                chosen.append(t)
                for c in range(k):
                    used_per_class[c] += vec[c]
                if pick(count - 1, j + 1, mask | tm, depth + 1):
                    return True
                chosen.pop()
                for c in range(k):
                    used_per_class[c] -= vec[c]
            return False

        for count in range(3):
            if pick(count, 0, mask, depth):
                return True
        failed.add(key)
        return False

    found = rec(0, 0, 0)
    if not found:
        stats.certified = cap >= sound_cap
        return None
    used = {v for t in chosen for v in t}
    groups = list(chosen)
    for c in model.classes:
        rest = sorted(v for v in c if v not in used)
        groups += [tuple(rest[i:i + 3]) for i in range(0, len(rest), 3)]
    return Packing(TRIANGLE, tuple(groups))
