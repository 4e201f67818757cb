"""Modular decomposition and triangle packing on k-modular graphs.

The decomposition is the plain cubic one: a disconnected (sub)graph gives a
union node over its components, a disconnected complement gives a join node
over the co-components, and otherwise the maximal strong modules are found
by growing the smallest module that contains each pair of vertices.

The packing DP reuses the free-vertex/free-edge tables.  The twinset of a
module is the whole module whenever it has any outside neighbour (all of
them see the same outside vertices), so every child may export.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Union

from . import tables
from .dh import PackingResult, _finish
from .errors import InvalidCertificate
from .graph import Graph

UNION, JOIN, PRIME = "union", "join", "prime"


@dataclass(frozen=True)
class MLeaf:
    vertex: int


@dataclass(frozen=True)
class MNode:
    kind: str
    children: tuple["ModularTree", ...]
    # prime nodes only: edges between child indices (0-based)
    quotient: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def quotient_graph(self) -> Graph:
        return Graph.from_edges(len(self.children), [(i + 1, j + 1) for i, j in self.quotient])


ModularTree = Union[MLeaf, MNode]


@dataclass(frozen=True)
class KModularCertificate:
    tree: ModularTree
    k: int


def tree_vertices(t: ModularTree) -> list[int]:
    if isinstance(t, MLeaf):
        return [t.vertex]
    return [v for c in t.children for v in tree_vertices(c)]


def nodes(t: ModularTree) -> Iterator[ModularTree]:
    yield t
    if isinstance(t, MNode):
        for c in t.children:
            yield from nodes(c)


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _components(masks, within: int, complement: bool) -> list[int]:
    comps = []
    rest = within
    while rest:
        low = rest & -rest
        comp, frontier = low, low
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nb = masks[v] & within
                if complement:
                    nb = within & ~nb & ~(1 << v)
                nxt |= nb
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def module_closure(masks, within: int, seed: int) -> int:
    """Smallest module of G[within] containing the vertex set ``seed``."""
    mod = seed
    changed = True
    while changed:
        changed = False
        for z in _bits(within & ~mod):
            seen = masks[z] & mod
            if seen and seen != mod:
                mod |= 1 << z
                changed = True
    return mod


def modular_decomposition(g: Graph) -> ModularTree:
    masks = g.masks

    def rec(within: int) -> ModularTree:
        vs = _bits(within)
        if len(vs) == 1:
            return MLeaf(vs[0])
        comps = _components(masks, within, False)
        if len(comps) > 1:
            return MNode(UNION, tuple(rec(c) for c in comps))
        cocomps = _components(masks, within, True)
        if len(cocomps) > 1:
            return MNode(JOIN, tuple(rec(c) for c in cocomps))
        parts: list[int] = []
        covered = 0
        for v in vs:
            if covered >> v & 1:
                continue
            part = 1 << v
            for w in vs:
                if w != v and not part >> w & 1:
                    m = module_closure(masks, within, (1 << v) | (1 << w))
                    if m != within:
                        part |= m
            parts.append(part)
            covered |= part
        reps = [p & -p for p in parts]
        quotient = frozenset(
            (i, j)
            for i, j in combinations(range(len(parts)), 2)
            if masks[reps[i].bit_length() - 1] & reps[j]
        )
        return MNode(PRIME, tuple(rec(p) for p in parts), quotient)

    if g.n == 0:
        raise InvalidCertificate("empty graph has no modular decomposition")
    return rec(_mask(g.vertices))


def is_k_modular(t: ModularTree, k: int) -> bool:
    return all(len(x.children) <= k for x in nodes(t) if isinstance(x, MNode) and x.kind == PRIME)


def _is_module(masks, full: int, mod: int) -> bool:
    for z in _bits(full & ~mod):
        seen = masks[z] & mod
        if seen and seen != mod:
            return False
    return True


def validate_modular_tree(g: Graph, t: ModularTree) -> bool:
    """Module property, child adjacency per node kind, and leaf bijection."""
    if sorted(tree_vertices(t)) != list(g.vertices):
        return False
    masks = g.masks
    full = _mask(g.vertices)
    for x in nodes(t):
        if isinstance(x, MLeaf):
            continue
        if len(x.children) < 2 or x.kind not in (UNION, JOIN, PRIME):
            return False
        sets = [_mask(tree_vertices(c)) for c in x.children]
        if not _is_module(masks, full, _mask(tree_vertices(x))):
            return False
        for i, j in combinations(range(len(sets)), 2):
            adj = [masks[v] & sets[j] for v in _bits(sets[i])]
            if all(a == sets[j] for a in adj):
                rel = True
            elif not any(adj):
                rel = False
            else:
                return False  # a child is not a module
            if x.kind == UNION and rel or x.kind == JOIN and not rel:
                return False
            if x.kind == PRIME and rel != ((i, j) in x.quotient):
                return False
        if x.kind == PRIME and not is_prime_graph(x.quotient_graph):
            return False
    return True


def is_prime_graph(h: Graph) -> bool:
    """At least three vertices and only trivial modules."""
    if h.n < 3:
        return False
    t = modular_decomposition(h)
    return t.kind == PRIME and all(isinstance(c, MLeaf) for c in t.children)


def _binarize(kind: str, children: list[tables.Table], export: bool) -> tables.Table:
    quotient = {frozenset((0, 1))} if kind == JOIN else set()
    acc = children[0]
    for pos, c in enumerate(children[1:], start=2):
        # partial joins must keep their free items for the remaining children
        last = pos == len(children)
        acc = tables.combine([acc, c], quotient, [True, True], export or not last)
    return acc


def triangle_packing_modular(g: Graph, cert: KModularCertificate) -> PackingResult:
    """Maximum triangle packing given a certified modular decomposition."""
    t = cert.tree
    if not is_k_modular(t, cert.k):
        raise InvalidCertificate(f"a prime node has more than k={cert.k} children")
    if not validate_modular_tree(g, t):
        raise InvalidCertificate("tree is not a modular decomposition of g")
    masks = g.masks
    full = _mask(g.vertices)

    def table(x: ModularTree) -> tables.Table:
        vs = _mask(tree_vertices(x))
        export = any(masks[v] & full & ~vs for v in _bits(vs))
        if isinstance(x, MLeaf):
            return tables.leaf_table(x.vertex, export)
        kids = [table(c) for c in x.children]
        if x.kind == PRIME:
            quotient = {frozenset(e) for e in x.quotient}
            return tables.combine(kids, quotient, [True] * len(kids), export)
        return _binarize(x.kind, kids, export)

    return _finish(g, table(t))
