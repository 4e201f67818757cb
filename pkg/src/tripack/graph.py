"""Graphs, certificate models and the packing type.

Vertices are the integers ``1..n``.  Every object here is immutable after
construction; solvers work on index sets and never mutate a shared graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidModel

TRIANGLE = "triangle"
SQUARE = "square"
KR = "kr"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``1..n`` stored as adjacency sets.

    ``adj[0]`` is an unused empty set so that ``adj[v]`` works for 1-based ids.
    """

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n + 1:
            raise InvalidModel(f"adjacency has {len(self.adj)} slots for n={self.n}")
        if self.adj[0]:
            raise InvalidModel("slot 0 must be empty")
        for v in range(1, self.n + 1):
            for u in self.adj[v]:
                if not 1 <= u <= self.n:
                    raise InvalidModel(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise InvalidModel(f"self-loop at {v}")
                if v not in self.adj[u]:
                    raise InvalidModel(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidModel(f"edge {u}-{v} out of range 1..{n}")
            if u == v:
                raise InvalidModel(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(1, n + 1), 2))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(1, self.n + 1):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency bitmasks; bit ``u`` of ``masks[v]`` is set iff u ~ v."""
        out = [0] * (self.n + 1)
        for v in range(1, self.n + 1):
            m = 0
            for u in self.adj[v]:
                m |= 1 << u
            out[v] = m
        return tuple(out)

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``1..k``; returns it with the old ids."""
        old = sorted(set(keep))
        new_id = {v: i + 1 for i, v in enumerate(old)}
        sub = Graph.from_edges(
            len(old),
            ((new_id[u], new_id[v]) for u, v in self.edges() if u in new_id and v in new_id),
        )
        return sub, old

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v - 1]``."""
        return Graph.from_edges(self.n, ((perm[u - 1], perm[v - 1]) for u, v in self.edges()))

    def components(self) -> list[list[int]]:
        seen = [False] * (self.n + 1)
        comps = []
        for s in range(1, self.n + 1):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def two_coloring(self) -> dict[int, int] | None:
        """A proper 2-coloring ``{v: 0|1}``, or None if the graph is not bipartite."""
        color: dict[int, int] = {}
        for s in range(1, self.n + 1):
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if u not in color:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return None
        return color


def complement(g: Graph) -> Graph:
    full = frozenset(g.vertices)
    return Graph(g.n, (frozenset(),) + tuple(full - g.adj[v] - {v} for v in g.vertices))


# ---------------------------------------------------------------------------
# permutation graphs


@dataclass(frozen=True)
class PermutationModel:
    """``pi[i - 1]`` is the value at position ``i``."""

    pi: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.pi) != list(range(1, len(self.pi) + 1)):
            raise InvalidModel(f"not a permutation of 1..{len(self.pi)}: {self.pi}")

    @property
    def n(self) -> int:
        return len(self.pi)

    def reversed(self) -> "PermutationModel":
        return PermutationModel(tuple(reversed(self.pi)))

    def position_of(self) -> list[int]:
        """Inverse permutation: ``pos[value]`` (index 0 unused)."""
        pos = [0] * (self.n + 1)
        for i, v in enumerate(self.pi, start=1):
            pos[v] = i
        return pos


def graph_from_permutation(model: PermutationModel, convention: str = "increasing") -> Graph:
    """Permutation graph on positions.

    With the default ``"increasing"`` convention ``i ~ j`` iff the pair is
    increasing, so cliques are increasing subsequences.  ``"crossing"`` gives
    the intersection graph of the line segments of the diagram (decreasing
    pairs), which is the complement.
    """
    if convention not in ("increasing", "crossing"):
        raise ValueError(f"unknown convention {convention!r}")
    sign = 1 if convention == "increasing" else -1
    pi = model.pi
    n = len(pi)
    return Graph.from_edges(
        n,
        ((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if sign * (pi[j] - pi[i]) > 0),
    )


# ---------------------------------------------------------------------------
# interval graphs


@dataclass(frozen=True)
class IntervalModel:
    """Closed intervals; vertex ``v`` owns ``intervals[v - 1]``."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ends = []
        for v, (l, r) in enumerate(self.intervals, start=1):
            if not l < r:
                raise InvalidModel(f"interval of vertex {v} has l >= r: ({l}, {r})")
            ends += [l, r]
        if len(set(ends)) != len(ends):
            raise InvalidModel("interval endpoints must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.intervals)


def graph_from_intervals(model: IntervalModel) -> Graph:
    iv = model.intervals
    n = len(iv)
    return Graph.from_edges(
        n,
        (
            (u + 1, v + 1)
            for u in range(n)
            for v in range(u + 1, n)
            if iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]
        ),
    )


@dataclass(frozen=True)
class CliqueArrangement:
    """Maximal cliques ``C_1..C_t`` in consecutive order."""

    cliques: tuple[frozenset[int], ...]
    first: dict[int, int] = field(compare=False, repr=False, default_factory=dict)
    last: dict[int, int] = field(compare=False, repr=False, default_factory=dict)

    def __post_init__(self) -> None:
        first, last = self.first, self.last
        first.clear()
        last.clear()
        for i, c in enumerate(self.cliques, start=1):
            for v in c:
                if v in last and last[v] != i - 1:
                    raise InvalidModel(f"vertex {v} does not occupy a consecutive run of cliques")
                first.setdefault(v, i)
                last[v] = i

    @property
    def t(self) -> int:
        return len(self.cliques)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.first)

    def edges(self) -> set[tuple[int, int]]:
        out = set()
        for c in self.cliques:
            out.update(combinations(sorted(c), 2))
        return out


def consecutive_arrangement(model: IntervalModel) -> CliqueArrangement:
    """Sweep sorted endpoints; a maximal clique closes at the first right
    endpoint that follows a left endpoint."""
    events = []
    for v, (l, r) in enumerate(model.intervals, start=1):
        events.append((l, 0, v))
        events.append((r, 1, v))
    events.sort()
    active: set[int] = set()
    cliques = []
    opened = False
    for _, is_right, v in events:
        if is_right:
            if opened:
                cliques.append(frozenset(active))
                opened = False
            active.discard(v)
        else:
            active.add(v)
            opened = True
    return CliqueArrangement(tuple(cliques))


def check_arrangement(g: Graph, arr: CliqueArrangement) -> bool:
    """Every clique is a maximal clique of ``g``, runs are consecutive (checked
    at construction) and the cliques cover every edge."""
    for c in arr.cliques:
        if not g.is_clique(c):
            return False
        common = None
        for v in c:
            common = set(g.adj[v]) if common is None else common & g.adj[v]
        if common and common - c:
            return False
    covered = arr.edges()
    return all(e in covered for e in g.edges())


# ---------------------------------------------------------------------------
# bipartite permutation graphs


@dataclass(frozen=True)
class BipartiteStrongModel:
    """Bipartite graph with candidate strong ordering ``X`` (<_1) and ``Y`` (<_2).

    ``order`` optionally fixes the merged top-line sequence of X and Y.
    """

    X: tuple[int, ...]
    Y: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    order: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        xs, ys = set(self.X), set(self.Y)
        if len(xs) != len(self.X) or len(ys) != len(self.Y) or xs & ys:
            raise InvalidModel("X and Y must be disjoint lists without repeats")
        if xs | ys != set(range(1, len(xs) + len(ys) + 1)):
            raise InvalidModel("X and Y must together cover 1..n")
        for x, y in self.edges:
            if x not in xs or y not in ys:
                raise InvalidModel(f"edge ({x}, {y}) is not an X-Y pair")
        if self.order is not None and sorted(self.order) != sorted(xs | ys):
            raise InvalidModel("merged order must list every vertex once")

    @property
    def n(self) -> int:
        return len(self.X) + len(self.Y)

    @cached_property
    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    @classmethod
    def from_graph(cls, g: Graph, X: Sequence[int], Y: Sequence[int]) -> "BipartiteStrongModel":
        xs = set(X)
        edges = frozenset((u, v) if u in xs else (v, u) for u, v in g.edges())
        return cls(tuple(X), tuple(Y), edges)


def check_strong_ordering(model: BipartiteStrongModel) -> bool:
    E = model.edges
    X, Y = model.X, model.Y
    for i, x1 in enumerate(X):
        for x2 in X[i + 1:]:
            for j, y1 in enumerate(Y):
                for y2 in Y[j + 1:]:
                    if (x1, y2) in E and (x2, y1) in E:
                        if (x1, y1) not in E or (x2, y2) not in E:
                            return False
    return True


# ---------------------------------------------------------------------------
# packings


@dataclass(frozen=True)
class Packing:
    """Pairwise vertex-disjoint groups each meant to induce ``kind``.

    ``kind`` is ``"triangle"``, ``"square"`` or ``"kr"`` (with ``r`` set).
    Groups are stored as sorted tuples, in sorted order.
    """

    kind: str
    groups: tuple[tuple[int, ...], ...]
    r: int = 3

    def __post_init__(self) -> None:
        if self.kind not in (TRIANGLE, SQUARE, KR):
            raise ValueError(f"unknown packing kind {self.kind!r}")
        object.__setattr__(self, "groups", tuple(sorted(tuple(sorted(g)) for g in self.groups)))
        if self.kind == TRIANGLE:
            object.__setattr__(self, "r", 3)
        elif self.kind == SQUARE:
            object.__setattr__(self, "r", 4)

    @property
    def group_size(self) -> int:
        return self.r

    def __len__(self) -> int:
        return len(self.groups)

    def covered(self) -> set[int]:
        return {v for g in self.groups for v in g}


def contains_c4(g: Graph, quad: Sequence[int]) -> bool:
    """True iff the four vertices carry a 4-cycle subgraph (chords allowed)."""
    a, b, c, d = quad
    e = g.has_edge
    return (
        (e(a, b) and e(b, c) and e(c, d) and e(d, a))
        or (e(a, b) and e(b, d) and e(d, c) and e(c, a))
        or (e(a, c) and e(c, b) and e(b, d) and e(d, a))
    )


def group_ok(g: Graph, kind: str, group: Sequence[int]) -> bool:
    if kind == SQUARE:
        return len(group) == 4 and contains_c4(g, group)
    return g.is_clique(group)


def verify_packing(g: Graph, p: Packing) -> bool:
    seen: set[int] = set()
    for grp in p.groups:
        if len(grp) != p.group_size or len(set(grp)) != len(grp):
            return False
        if any(not 1 <= v <= g.n for v in grp):
            return False
        if seen & set(grp):
            return False
        seen |= set(grp)
        if not group_ok(g, p.kind, grp):
            return False
    return True


def is_partition(g: Graph, p: Packing) -> bool:
    return verify_packing(g, p) and len(p.covered()) == g.n
