"""Triangle packing on distance-hereditary graphs.

A DH tree is a rooted binary tree whose leaves are the vertices.  Every
internal node X carries

* ``join``: whether the twinsets of its two children are completely
  adjacent (True) or completely non-adjacent (False);
* ``twinset``: which child twinsets make up the twinset of X
  (``both``, ``left``, ``right`` or ``empty``).

The twinset of a leaf is the leaf itself.  A tree is valid when the join
flags match the graph, all twinset vertices of X share the same
neighbours outside X, and no other vertex of X has a neighbour outside X.
Under those rules a triangle leaving X touches X only through its
twinset, which is what the free-vertex/free-edge tables rely on.

Valid trees come from construction sequences (start, pendant, true twin,
false twin), which generate exactly the connected DH graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from . import tables
from .errors import InvalidTree, MalformedSequence
from .graph import TRIANGLE, Graph, Packing, verify_packing

SELECTORS = ("both", "left", "right", "empty")


@dataclass(frozen=True)
class DHLeaf:
    vertex: int


@dataclass(frozen=True)
class DHNode:
    left: "DHTree"
    right: "DHTree"
    join: bool
    twinset: str = "both"

    def __post_init__(self) -> None:
        if self.twinset not in SELECTORS:
            raise InvalidTree(f"unknown twinset selector {self.twinset!r}")


DHTree = Union[DHLeaf, DHNode]


def leaves(t: DHTree) -> list[int]:
    if isinstance(t, DHLeaf):
        return [t.vertex]
    return leaves(t.left) + leaves(t.right)


def internal_nodes(t: DHTree) -> Iterator[DHNode]:
    """Internal nodes in preorder."""
    if isinstance(t, DHNode):
        yield t
        yield from internal_nodes(t.left)
        yield from internal_nodes(t.right)


def _selected(sel: str) -> tuple[bool, bool]:
    return sel in ("both", "left"), sel in ("both", "right")


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def validate_dh_tree(g: Graph, t: DHTree) -> bool:
    """Check the leaf bijection, join flags and twinset conditions against g."""
    if sorted(leaves(t)) != list(g.vertices):
        return False
    masks = g.masks

    def walk(node: DHTree) -> tuple[int, int] | None:
        # returns (vertex mask, twinset mask) or None on failure
        if isinstance(node, DHLeaf):
            return 1 << node.vertex, 1 << node.vertex
        a = walk(node.left)
        b = walk(node.right)
        if a is None or b is None:
            return None
        (x1, s1), (x2, s2) = a, b
        for v in _bits(s1):
            seen = masks[v] & s2
            if node.join and seen != s2:
                return None
            if not node.join and seen:
                return None
        x = x1 | x2
        use_l, use_r = _selected(node.twinset)
        s = (s1 if use_l else 0) | (s2 if use_r else 0)
        if node is not t and not _twinset_ok(masks, x, s):
            return None
        return x, s

    return walk(t) is not None


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _twinset_ok(masks, x: int, s: int) -> bool:
    outside = None
    for v in _bits(x):
        out = masks[v] & ~x
        if s >> v & 1:
            if outside is None:
                outside = out
            elif out != outside:
                return False
        elif out:
            return False
    return True


Shape = Union[int, tuple]


def build_dh_tree(g: Graph, shape: Shape) -> DHTree:
    """Attach join flags and twinset selectors to a binary tree shape.

    ``shape`` is a vertex or a pair of shapes.  A child twinset is kept when
    one of its vertices sees outside the node.  The result is only a valid
    DH tree if the shape is compatible with g; check with validate_dh_tree.
    """
    masks = g.masks

    def rec(sh: Shape, is_root: bool) -> tuple[DHTree, int, int]:
        if isinstance(sh, int):
            return DHLeaf(sh), 1 << sh, 1 << sh
        if len(sh) != 2:
            raise InvalidTree(f"shape nodes must be binary, got {sh!r}")
        lt, x1, s1 = rec(sh[0], False)
        rt, x2, s2 = rec(sh[1], False)
        join = bool(s1 and s2) and all(masks[v] & s2 == s2 for v in _bits(s1))
        x = x1 | x2
        use_l = not is_root and any(masks[v] & ~x for v in _bits(s1))
        use_r = not is_root and any(masks[v] & ~x for v in _bits(s2))
        sel = {(True, True): "both", (True, False): "left", (False, True): "right", (False, False): "empty"}[
            (use_l, use_r)
        ]
        s = (s1 if use_l else 0) | (s2 if use_r else 0)
        return DHNode(lt, rt, join, sel), x, s

    return rec(shape, True)[0]


def dh_tree_from_construction(steps: Sequence[tuple]) -> tuple[Graph, DHTree]:
    """Build a DH graph and a valid tree from (op[, vertex]) steps.

    ``("start",)`` creates vertex 1 and must come first; ``("pendant", v)``,
    ``("truetwin", v)`` and ``("falsetwin", v)`` add the next vertex w as a
    pendant or twin of v.  Leaf v of the tree becomes the node (v, w).
    """
    if not steps or tuple(steps[0])[:1] != ("start",) or len(steps[0]) != 1:
        raise MalformedSequence("a construction sequence starts with a single 'start'")
    adj: list[set[int]] = [set(), set()]
    shape: dict[int, list] = {}  # vertex -> mutable leaf cell
    root: list = [1]
    shape[1] = root
    for pos, step in enumerate(steps[1:], start=2):
        if len(step) != 2:
            raise MalformedSequence(f"step {pos}: expected (op, vertex), got {step!r}")
        op, v = step
        if not isinstance(v, int) or not 1 <= v < len(adj):
            raise MalformedSequence(f"step {pos}: vertex {v!r} does not exist yet")
        w = len(adj)
        if op == "pendant":
            nb = {v}
        elif op == "truetwin":
            nb = adj[v] | {v}
        elif op == "falsetwin":
            nb = set(adj[v])
        else:
            raise MalformedSequence(f"step {pos}: unknown operation {op!r}")
        adj.append(set(nb))
        for u in nb:
            adj[u].add(w)
        cell = shape[v]
        left, right = [v], [w]
        cell[:] = [left, right]
        shape[v], shape[w] = left, right
    g = Graph(len(adj) - 1, tuple(frozenset(a) for a in adj))

    def freeze(cell: list) -> Shape:
        return cell[0] if len(cell) == 1 else (freeze(cell[0]), freeze(cell[1]))

    return g, build_dh_tree(g, freeze(root))


@dataclass(frozen=True)
class PackingResult:
    size: int
    packing: Packing


def _dh_table(t: DHTree, export: bool) -> tables.Table:
    if isinstance(t, DHLeaf):
        return tables.leaf_table(t.vertex, True)
    use_l, use_r = _selected(t.twinset)
    left = _dh_table(t.left, True)
    right = _dh_table(t.right, True)
    quotient = {frozenset((0, 1))} if t.join else set()
    return tables.combine([left, right], quotient, [use_l, use_r], export and (use_l or use_r))


def triangle_packing_dh(g: Graph, t: DHTree) -> PackingResult:
    """Maximum triangle packing of a DH graph given a valid DH tree."""
    if not validate_dh_tree(g, t):
        raise InvalidTree("tree does not certify g as distance-hereditary")
    table = _dh_table(t, False)
    return _finish(g, table)


def _finish(g: Graph, table: tables.Table) -> PackingResult:
    key = max(table.values, key=lambda k: (table.values[k], -k[0], -k[1]))
    tris, _, _ = tables.reconstruct(table, key)
    packing = Packing(TRIANGLE, tuple(tris))
    assert len(packing) == table.values[key] and verify_packing(g, packing), "witness reconstruction failed"
    return PackingResult(len(packing), packing)
