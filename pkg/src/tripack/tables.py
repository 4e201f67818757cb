"""Free-vertex / free-edge tables for triangle packing on decomposition trees.

A node of a decomposition tree owns a vertex set X and a twinset S: the
vertices of X with neighbours outside X, all of which see the same outside
vertices.  A triangle that leaves X meets it in one vertex of S or in an
edge inside S.  The table of X therefore maps ``(fv, fe)`` to the largest
number of triangles inside X that still leaves ``fv`` free twinset vertices
and ``fe`` free twinset edges, all pairwise disjoint (the edges a matching).

Tables are kept closed under "at least" semantics: dropping a free item or
splitting a free edge into two free vertices never lowers the value.

``combine`` builds a parent table from its children.  Children ``i`` and
``j`` are either completely adjacent (a quotient edge) or not adjacent at
all.  Resources flow through these item types:

* edge of i + vertex of j        -> triangle   (quotient edge ij)
* vertex of i, j, l              -> triangle   (quotient triangle ijl)
* vertex of i + vertex of j      -> exported free edge
* vertex / edge of i             -> exported as is

Exports are only allowed from children whose twinset lies in the parent's.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

Key = tuple[int, int]


@dataclass
class Table:
    values: dict[Key, int]
    recipe: dict[Key, tuple] = field(default_factory=dict)
    children: tuple["Table", ...] = ()
    vertex: int | None = None
    items: tuple[tuple, ...] = ()

    def best(self) -> int:
        return max(self.values.values())


def leaf_table(vertex: int, in_twinset: bool) -> Table:
    values = {(0, 0): 0}
    recipe: dict[Key, tuple] = {(0, 0): ("leaf",)}
    if in_twinset:
        values[(1, 0)] = 0
        recipe[(1, 0)] = ("leaf",)
    return Table(values, recipe, vertex=vertex)


def close(values: dict[Key, int], recipe: dict[Key, tuple]) -> None:
    """Close a table downward in place, recording where each value came from."""
    if not values:
        return
    top = max(a + 2 * b for a, b in values)
    keys = [(a, b) for w in range(top, -1, -1) for b in range(w // 2, -1, -1) for a in (w - 2 * b,)]
    for a, b in keys:
        for src in ((a + 1, b), (a, b + 1), (a - 2, b + 1)):
            if src[0] < 0 or src not in values:
                continue
            if values.get((a, b), -1) < values[src]:
                values[(a, b)] = values[src]
                recipe[(a, b)] = ("from", src)


def _item_types(m: int, quotient: set[frozenset[int]], exportable: Sequence[bool], export: bool):
    """Each item consumes [(child, kind, amount)] and yields (triangles, dv, de)."""
    items = []
    for i in range(m):
        for j in range(m):
            if i != j and frozenset((i, j)) in quotient:
                items.append((("e", i), ("v", j)))
    for i, j, l in combinations(range(m), 3):
        if {frozenset((i, j)), frozenset((j, l)), frozenset((i, l))} <= quotient:
            items.append((("v", i), ("v", j), ("v", l)))
    gains = [(1, 0, 0)] * len(items)
    if export:
        for i, j in combinations(range(m), 2):
            if exportable[i] and exportable[j] and frozenset((i, j)) in quotient:
                items.append((("v", i), ("v", j)))
                gains.append((0, 0, 1))
        for i in range(m):
            if exportable[i]:
                items.append((("v", i),))
                gains.append((0, 1, 0))
                items.append((("e", i),))
                gains.append((0, 0, 1))
    return items, gains


def combine(
    children: Sequence[Table],
    quotient: set[frozenset[int]],
    exportable: Sequence[bool],
    export: bool,
) -> Table:
    """Parent table from child tables (see module docstring)."""
    m = len(children)
    items, gains = _item_types(m, quotient, exportable, export)
    domains = [set(c.values) for c in children]
    zero = tuple((0, 0) for _ in range(m))
    # state: (demands, fv, fe) -> (triangles, item counts)
    states: dict[tuple, tuple[int, tuple[int, ...]]] = {(zero, 0, 0): (0, ())}
    for item, (tri, dv, de) in zip(items, gains):
        nxt: dict[tuple, tuple[int, tuple[int, ...]]] = {}
        for (dem, fv, fe), (val, counts) in states.items():
            cur = list(dem)
            c = 0
            while True:
                key = (tuple(cur), fv + c * dv, fe + c * de)
                cand = (val + c * tri, counts + (c,))
                old = nxt.get(key)
                if old is None or old[0] < cand[0]:
                    nxt[key] = cand
                ok = True
                for kind, child in item:
                    a, b = cur[child]
                    cur[child] = (a + 1, b) if kind == "v" else (a, b + 1)
                    if cur[child] not in domains[child]:
                        ok = False
                if not ok:
                    break
                c += 1
        states = nxt
    values: dict[Key, int] = {}
    recipe: dict[Key, tuple] = {}
    for (dem, fv, fe), (val, counts) in states.items():
        total = val + sum(children[i].values[dem[i]] for i in range(m))
        if values.get((fv, fe), -1) < total:
            values[(fv, fe)] = total
            recipe[(fv, fe)] = ("combine", dem, counts)
    close(values, recipe)
    return Table(values, recipe, tuple(children), items=tuple(items))


def reconstruct(table: Table, key: Key) -> tuple[list[tuple[int, ...]], list[int], list[tuple[int, int]]]:
    """Triangles inside the node plus exactly ``key`` free vertices and edges."""
    how = table.recipe[key]
    if how[0] == "leaf":
        return [], ([table.vertex] if key == (1, 0) else []), []
    if how[0] == "from":
        tris, vs, es = reconstruct(table, how[1])
        fv, fe = key
        vs = list(vs)
        for e in es[fe:]:
            vs.extend(e)
        assert len(vs) >= fv and len(es) >= fe
        return tris, vs[:fv], list(es[:fe])
    _, dem, counts = how
    tris: list[tuple[int, ...]] = []
    pools_v: list[list[int]] = []
    pools_e: list[list[tuple[int, int]]] = []
    for child, d in zip(table.children, dem):
        t, vs, es = reconstruct(child, d)
        tris += t
        pools_v.append(list(vs))
        pools_e.append(list(es))
    out_v: list[int] = []
    out_e: list[tuple[int, int]] = []
    for item, c in zip(table.items, counts):
        for _ in range(c):
            taken: list[int] = []
            for kind, child in item:
                if kind == "v":
                    taken.append(pools_v[child].pop())
                else:
                    taken.extend(pools_e[child].pop())
            if len(taken) == 3:
                tris.append(tuple(sorted(taken)))
            elif len(item) == 2:
                out_e.append(tuple(sorted(taken)))
            elif item[0][0] == "v":
                out_v.append(taken[0])
            else:
                out_e.append(tuple(sorted(taken)))
    assert all(not p for p in pools_v) and all(not p for p in pools_e), "unconsumed child resources"
    return tris, out_v, out_e
