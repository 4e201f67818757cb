"""Plain-text file formats.

Graph files follow the DIMACS style: ``p <n> <m>`` then ``e <u> <v>``
lines, with ``c`` lines as comments.  Every other format is line based
too; blank lines and lines starting with ``#`` are ignored everywhere.
Loaders raise FormatError with a line number on malformed input.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Iterator

from .cobipartite import CobipartiteModel
from .colored_perm import ColoredPermutation
from .copartite import CoPartiteModel
from .dh import SELECTORS, DHLeaf, DHNode, DHTree
from .errors import FormatError, InvalidModel, TripackError
from .graph import KR, SQUARE, TRIANGLE, BipartiteStrongModel, Graph, IntervalModel, Packing, PermutationModel
from .modular import JOIN, PRIME, UNION, MLeaf, MNode, ModularTree
from .multipartite import MultipartiteSpec
from .reduction import GadgetGraph, ThreeDMInstance


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def _ints(tokens: Iterable[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"line {no}: expected integers, got {' '.join(tokens)!r}") from exc


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc


def _model(fn, *args):
    try:
        return fn(*args)
    except InvalidModel as exc:
        raise FormatError(str(exc)) from exc


# ---------------------------------------------------------------------------
# graphs


def parse_graph(text: str, extra: dict[str, list] | None = None) -> Graph:
    """Parse a graph file; lines with other leading keywords go to ``extra``."""
    n = m = None
    edges: list[tuple[int, int]] = []
    for no, tok in _lines(text):
        head = tok[0]
        if head == "c":
            if extra is not None:
                extra.setdefault("c", []).append((no, tok[1:]))
            continue
        if head == "p":
            if n is not None:
                raise FormatError(f"line {no}: duplicate header")
            vals = _ints(tok[-2:], no)
            if len(tok) not in (3, 4) or any(v < 0 for v in vals):
                raise FormatError(f"line {no}: header must be 'p <n> <m>'")
            n, m = vals
        elif head == "e":
            if n is None:
                raise FormatError(f"line {no}: edge before header")
            if len(tok) != 3:
                raise FormatError(f"line {no}: edge line must be 'e <u> <v>'")
            u, v = _ints(tok[1:], no)
            if not 1 <= u < v <= n:
                raise FormatError(f"line {no}: edge ({u}, {v}) needs 1 <= u < v <= {n}")
            edges.append((u, v))
        elif extra is not None:
            extra.setdefault(head, []).append((no, tok))
        else:
            raise FormatError(f"line {no}: unknown line type {head!r}")
    if n is None:
        raise FormatError("missing 'p <n> <m>' header")
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p {g.n} {g.m}")
    out += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def parse_permutation(text: str) -> PermutationModel:
    rows = list(_lines(text))
    if len(rows) != 1:
        raise FormatError("permutation file must hold exactly one line")
    no, tok = rows[0]
    return _model(PermutationModel, tuple(_ints(tok, no)))


def format_permutation(model: PermutationModel) -> str:
    return " ".join(map(str, model.pi)) + "\n"


def parse_intervals(text: str) -> IntervalModel:
    by_vertex: dict[int, tuple[int, int]] = {}
    for no, tok in _lines(text):
        if len(tok) != 3:
            raise FormatError(f"line {no}: expected '<vertex> <l> <r>'")
        v, l, r = _ints(tok, no)
        if v in by_vertex:
            raise FormatError(f"line {no}: vertex {v} listed twice")
        by_vertex[v] = (l, r)
    if sorted(by_vertex) != list(range(1, len(by_vertex) + 1)):
        raise FormatError("interval vertices must be exactly 1..n")
    return _model(IntervalModel, tuple(by_vertex[v] for v in sorted(by_vertex)))


def format_intervals(model: IntervalModel) -> str:
    return "".join(f"{v} {l} {r}\n" for v, (l, r) in enumerate(model.intervals, start=1))


def _labelled(rows, labels: tuple[str, ...]) -> tuple[dict[str, list[int]], list[tuple[int, int]]]:
    found: dict[str, list[int]] = {}
    edges = []
    for no, tok in rows:
        head = tok[0]
        if head.endswith(":") and head[:-1] in labels:
            if head[:-1] in found:
                raise FormatError(f"line {no}: duplicate {head} line")
            found[head[:-1]] = _ints(tok[1:], no)
        elif head == "e" and len(tok) == 3:
            u, v = _ints(tok[1:], no)
            edges.append((u, v))
        else:
            raise FormatError(f"line {no}: unexpected line {' '.join(tok)!r}")
    return found, edges


def parse_bipartite(text: str) -> BipartiteStrongModel:
    found, edges = _labelled(_lines(text), ("X", "Y", "order"))
    if "X" not in found or "Y" not in found:
        raise FormatError("bipartite model needs 'X:' and 'Y:' lines")
    xs = set(found["X"])
    pairs = frozenset((u, v) if u in xs else (v, u) for u, v in edges)
    order = tuple(found["order"]) if "order" in found else None
    return _model(BipartiteStrongModel, tuple(found["X"]), tuple(found["Y"]), pairs, order)


def format_bipartite(model: BipartiteStrongModel) -> str:
    out = ["X: " + " ".join(map(str, model.X)), "Y: " + " ".join(map(str, model.Y))]
    if model.order is not None:
        out.append("order: " + " ".join(map(str, model.order)))
    out += [f"e {x} {y}" for x, y in sorted(model.edges)]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# packings


def _kind_token(p: Packing) -> str:
    return f"kr:{p.r}" if p.kind == KR else p.kind


def parse_kind(token: str) -> tuple[str, int]:
    if token in (TRIANGLE, SQUARE):
        return token, 3 if token == TRIANGLE else 4
    m = re.fullmatch(r"kr:(\d+)", token)
    if m and int(m.group(1)) >= 1:
        return KR, int(m.group(1))
    raise FormatError(f"unknown packing kind {token!r}")


def parse_packing(text: str) -> Packing:
    rows = list(_lines(text))
    if not rows or rows[0][1][0] != "k" or len(rows[0][1]) != 3:
        raise FormatError("packing file must start with 'k <kind> <count>'")
    no, tok = rows[0]
    kind, r = parse_kind(tok[1])
    (count,) = _ints(tok[2:], no)
    groups = [tuple(_ints(t, n_)) for n_, t in rows[1:]]
    if len(groups) != count:
        raise FormatError(f"header announces {count} groups, found {len(groups)}")
    try:
        return Packing(kind, tuple(groups), r)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_packing(p: Packing) -> str:
    out = [f"k {_kind_token(p)} {len(p)}"]
    out += [" ".join(map(str, grp)) for grp in p.groups]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# class-specific models


def parse_colors(text: str, model: PermutationModel, r: int | None = None, on: str = "values") -> ColoredPermutation:
    """One line of colors, read per value (default) or per position."""
    rows = list(_lines(text))
    if len(rows) != 1:
        raise FormatError("colors file must hold exactly one line")
    no, tok = rows[0]
    colors = _ints(tok, no)
    r = max(colors, default=1) if r is None else r
    if on == "positions":
        return _model(ColoredPermutation.from_position_colors, model, colors, r)
    if on != "values":
        raise FormatError(f"colors are read on 'values' or 'positions', not {on!r}")
    return _model(ColoredPermutation, model, tuple(colors), r)


def format_colors(cp: ColoredPermutation) -> str:
    return " ".join(map(str, cp.colors)) + "\n"


def parse_sizes(text: str) -> MultipartiteSpec:
    rows = list(_lines(text))
    if len(rows) != 1 or rows[0][1][0] != "sizes":
        raise FormatError("sizes file must be one line 'sizes a_1 ... a_t'")
    no, tok = rows[0]
    return _model(MultipartiteSpec, tuple(_ints(tok[1:], no)))


def format_sizes(spec: MultipartiteSpec) -> str:
    return "sizes " + " ".join(map(str, spec.sizes)) + "\n"


def parse_3dm(text: str) -> ThreeDMInstance:
    q = None
    triples = []
    for no, tok in _lines(text):
        if tok[0] == "q" and len(tok) == 2:
            if q is not None:
                raise FormatError(f"line {no}: duplicate 'q' line")
            (q,) = _ints(tok[1:], no)
        elif tok[0] == "t" and len(tok) == 4:
            triples.append(tuple(_ints(tok[1:], no)))
        else:
            raise FormatError(f"line {no}: expected 'q <q>' or 't <x> <y> <z>'")
    if q is None:
        raise FormatError("missing 'q <q>' line")
    return _model(ThreeDMInstance, q, tuple(triples))


def format_3dm(inst: ThreeDMInstance) -> str:
    return f"q {inst.q}\n" + "".join(f"t {x} {y} {z}\n" for x, y, z in inst.triples)


def format_gadget(gg: GadgetGraph) -> str:
    roles = [f"role {v} {gg.roles[v]}" for v in sorted(gg.roles)]
    return format_graph(gg.graph, [f"target {gg.target}", *roles])


def parse_cobipartite(text: str) -> CobipartiteModel:
    found, edges = _labelled(_lines(text), ("A", "B"))
    if "A" not in found or "B" not in found:
        raise FormatError("cobipartite model needs 'A:' and 'B:' lines")
    sa = set(found["A"])
    cross = frozenset((u, v) if u in sa else (v, u) for u, v in edges)
    return _model(CobipartiteModel, tuple(found["A"]), tuple(found["B"]), cross)


def format_cobipartite(model: CobipartiteModel) -> str:
    out = ["A: " + " ".join(map(str, model.A)), "B: " + " ".join(map(str, model.B))]
    out += [f"e {a} {b}" for a, b in sorted(model.cross)]
    return "\n".join(out) + "\n"


def parse_copartite(text: str) -> CoPartiteModel:
    extra: dict[str, list] = {}
    g = parse_graph(text, extra)
    classes: dict[int, tuple[int, ...]] = {}
    for head, rows in extra.items():
        if head != "class":
            no = rows[0][0]
            raise FormatError(f"line {no}: unknown line type {head!r}")
        for no, tok in rows:
            if len(tok) < 2 or not tok[1].endswith(":"):
                raise FormatError(f"line {no}: expected 'class <i>: <ids>'")
            (i,) = _ints([tok[1][:-1]], no)
            if i in classes:
                raise FormatError(f"line {no}: class {i} listed twice")
            classes[i] = tuple(_ints(tok[2:], no))
    return _model(CoPartiteModel, g, tuple(classes[i] for i in sorted(classes)))


def format_copartite(model: CoPartiteModel) -> str:
    body = format_graph(model.graph)
    return body + "".join(f"class {i}: {' '.join(map(str, c))}\n" for i, c in enumerate(model.classes, start=1))


# ---------------------------------------------------------------------------
# trees


def _sexpr(text: str):
    """Nested lists of tokens from a parenthesised text."""
    body = "\n".join(line for line in text.splitlines() if not line.strip().startswith("#"))
    tokens = re.findall(r"\(|\)|[^\s()]+", body)
    pos = 0

    def parse():
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != "(":
            raise FormatError("expected '('")
        pos += 1
        out = []
        while pos < len(tokens) and tokens[pos] != ")":
            out.append(parse() if tokens[pos] == "(" else tokens[pos])
            if not isinstance(out[-1], list):
                pos += 1
        if pos >= len(tokens):
            raise FormatError("unbalanced parentheses")
        pos += 1
        return out

    tree = parse()
    if pos != len(tokens):
        raise FormatError("trailing content after the tree")
    return tree


def _attrs(items: list) -> tuple[dict[str, str], list]:
    attrs, kids = {}, []
    for it in items:
        if isinstance(it, list):
            kids.append(it)
        elif "=" in it:
            k, v = it.split("=", 1)
            attrs[k] = v
        else:
            raise FormatError(f"unexpected token {it!r}")
    return attrs, kids


def _leaf(item: list) -> int:
    if len(item) != 2:
        raise FormatError(f"leaf must be '(leaf <vertex>)', got {item!r}")
    return _ints([item[1]], 0)[0]


def parse_dh_tree(text: str) -> DHTree:
    def conv(item: list) -> DHTree:
        if not item:
            raise FormatError("empty node")
        if item[0] == "leaf":
            return DHLeaf(_leaf(item))
        if item[0] != "node" or len(item) < 2:
            raise FormatError(f"expected 'node <id> ...' or 'leaf <v>', got {item[:2]!r}")
        attrs, kids = _attrs(item[2:])
        if len(kids) != 2:
            raise FormatError(f"node {item[1]} must have exactly two children")
        if attrs.get("join") not in ("0", "1") or attrs.get("twinset") not in SELECTORS:
            raise FormatError(f"node {item[1]} needs join=<0|1> and twinset=<{'|'.join(SELECTORS)}>")
        return DHNode(conv(kids[0]), conv(kids[1]), attrs["join"] == "1", attrs["twinset"])

    return conv(_sexpr(text))


def format_dh_tree(t: DHTree) -> str:
    counter = [0]

    def rec(x: DHTree, depth: int) -> str:
        pad = "  " * depth
        if isinstance(x, DHLeaf):
            return f"{pad}(leaf {x.vertex})"
        counter[0] += 1
        head = f"{pad}(node {counter[0]} join={int(x.join)} twinset={x.twinset}"
        return head + "\n" + rec(x.left, depth + 1) + "\n" + rec(x.right, depth + 1) + ")"

    return rec(t, 0) + "\n"


def parse_construction(text: str) -> list[tuple]:
    steps: list[tuple] = []
    for no, tok in _lines(text):
        if tok == ["start"]:
            steps.append(("start",))
        elif len(tok) == 2 and tok[0] in ("pendant", "truetwin", "falsetwin"):
            steps.append((tok[0], _ints(tok[1:], no)[0]))
        else:
            raise FormatError(f"line {no}: expected 'start' or '<pendant|truetwin|falsetwin> <v>'")
    return steps


def format_construction(steps) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in steps)


def is_construction(text: str) -> bool:
    first = next(_lines(text), None)
    return first is not None and first[1] == ["start"]


def parse_modular_tree(text: str) -> ModularTree:
    def conv(item: list) -> ModularTree:
        if not item:
            raise FormatError("empty node")
        if item[0] == "leaf":
            return MLeaf(_leaf(item))
        if item[0] != "node" or len(item) < 2:
            raise FormatError(f"expected 'node <id> ...' or 'leaf <v>', got {item[:2]!r}")
        attrs, kids = _attrs(item[2:])
        kind = attrs.get("kind")
        if kind not in (UNION, JOIN, PRIME):
            raise FormatError(f"node {item[1]} needs kind=<union|join|prime>")
        quotient: set[tuple[int, int]] = set()
        if kind == PRIME:
            for pair in filter(None, attrs.get("quotient", "").split(",")):
                m = re.fullmatch(r"(\d+)-(\d+)", pair)
                if not m:
                    raise FormatError(f"bad quotient edge {pair!r}")
                i, j = sorted((int(m.group(1)) - 1, int(m.group(2)) - 1))
                if not 0 <= i < j < len(kids):
                    raise FormatError(f"quotient edge {pair!r} out of range")
                quotient.add((i, j))
        elif "quotient" in attrs:
            raise FormatError(f"node {item[1]}: only prime nodes carry a quotient")
        return MNode(kind, tuple(conv(k) for k in kids), frozenset(quotient))

    return conv(_sexpr(text))


def format_modular_tree(t: ModularTree) -> str:
    counter = [0]

    def rec(x: ModularTree, depth: int) -> str:
        pad = "  " * depth
        if isinstance(x, MLeaf):
            return f"{pad}(leaf {x.vertex})"
        counter[0] += 1
        head = f"{pad}(node {counter[0]} kind={x.kind}"
        if x.kind == PRIME:
            head += " quotient=" + ",".join(f"{i + 1}-{j + 1}" for i, j in sorted(x.quotient))
        return head + "".join("\n" + rec(c, depth + 1) for c in x.children) + ")"

    return rec(t, 0) + "\n"


def load(path: str | Path, parser):
    """Read and parse a file, wrapping model errors as FormatError."""
    text = read_text(path)
    try:
        return parser(text)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from exc
    except TripackError as exc:
        raise FormatError(f"{path}: {exc}") from exc
