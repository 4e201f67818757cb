"""Command-line front end: ``tripack <subcommand> ...``.

Exit codes: 0 solved / true, 1 no partition / false, 2 usage error,
3 instance error (bad file, invalid certificate, instance too large),
4 internal error (a solver produced something that failed re-verification).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from . import io
from .cobipartite import divergence, triangle_partition_cobipartite
from .colored_perm import colored_partition
from .copartite import SearchStats, triangle_partition_co_kpartite
from .dh import dh_tree_from_construction, triangle_packing_dh
from .errors import TripackError
from .gen import (
    GenConfig,
    gen_3dm,
    gen_bipperm,
    gen_cobipartite,
    gen_colored_perm,
    gen_copartite,
    gen_dh_steps,
    gen_interval,
    gen_modular,
    gen_multipartite,
    gen_permutation,
)
from .graph import Graph, Packing, graph_from_intervals, graph_from_permutation, is_partition, verify_packing
from .interval import triangle_packing_interval_exp, triangle_partition_interval
from .bipperm import c4_packing_bipperm
from .modular import KModularCertificate, MNode, PRIME, modular_decomposition, nodes, triangle_packing_modular
from .multipartite import triangle_packing_multipartite, triangle_partition_multipartite
from .oracle import count_partitionable_permutations, max_pattern_packing_exact, pattern_partition_exact
from .reduction import reduce


OK, NO, USAGE, INSTANCE, INTERNAL = 0, 1, 2, 3, 4
CLASSES = ("interval", "colored-perm", "multipartite", "bipperm", "cobipartite", "copartite", "dh", "modular")
GEN_CLASSES = CLASSES + ("permutation", "graph", "3dm")


class UsageError(Exception):
    pass


class InternalError(Exception):
    pass


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("TRIPACK_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"TRIPACK_SEED must be an integer, got {env!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _stats(args, **values) -> None:
    if args.stats:
        for k, v in values.items():
            print(f"{k}={v}")


# ---------------------------------------------------------------------------
# solve


def _solve_graph(args) -> tuple[Graph, Packing | None, dict]:
    """Dispatch on --class; returns (graph, packing or None, extra stats)."""
    cls, problem = args.cls, args.problem
    extra: dict = {}
    if cls == "interval":
        model = io.load(args.input, io.parse_intervals)
        g = graph_from_intervals(model)
        if problem == "partition":
            return g, triangle_partition_interval(model), extra
        res = triangle_packing_interval_exp(model, allow_large=args.allow_large)
        extra["nodes"] = res.nodes_explored
        return g, res.witness, extra
    if cls == "colored-perm":
        if problem != "partition":
            raise UsageError("colored-perm only supports --problem partition")
        if not args.colors:
            raise UsageError("colored-perm needs --colors <file>")
        perm = io.load(args.input, io.parse_permutation)
        cp = io.load(args.colors, lambda t: io.parse_colors(t, perm, args.r, args.colors_on))
        return graph_from_permutation(perm), colored_partition(cp), extra
    if cls == "multipartite":
        spec = io.load(args.input, io.parse_sizes)
        if problem == "partition":
            res = triangle_partition_multipartite(spec)
            return spec.graph(), None if res is None else res[1], extra
        return spec.graph(), triangle_packing_multipartite(spec)[2], extra
    if cls == "bipperm":
        model = io.load(args.input, io.parse_bipartite)
        return model.graph, c4_packing_bipperm(model), extra
    if cls == "cobipartite":
        if problem != "partition":
            raise UsageError("cobipartite only supports --problem partition")
        model = io.load(args.input, io.parse_cobipartite)
        div = divergence(model)
        if div is not None:
            print(f"warning: published criterion says {div[0]}, exact answer is {div[1]}", file=sys.stderr)
        return model.graph, triangle_partition_cobipartite(model), extra
    if cls == "copartite":
        if problem != "partition":
            raise UsageError("copartite only supports --problem partition")
        model = io.load(args.input, io.parse_copartite)
        st = SearchStats()
        res = triangle_partition_co_kpartite(model, cap=args.unsound_cap, stats=st)
        extra.update(nodes=st.nodes, certified=int(st.certified))
        if res is None and not st.certified:
            print("warning: no partition found under --unsound-cap; the answer is not certified", file=sys.stderr)
        return model.graph, res, extra
    if cls == "dh":
        text = io.read_text(args.input)
        if io.is_construction(text):
            g, tree = dh_tree_from_construction(io.load(args.input, io.parse_construction))
        else:
            if not args.tree:
                raise UsageError("dh needs a construction file or a graph file with --tree")
            g = io.load(args.input, io.parse_graph)
            tree = io.load(args.tree, io.parse_dh_tree)
        return g, triangle_packing_dh(g, tree).packing, extra
    if cls == "modular":
        g = io.load(args.input, io.parse_graph)
        tree = io.load(args.tree, io.parse_modular_tree) if args.tree else modular_decomposition(g)
        k = args.k
        if k is None:
            k = max((len(x.children) for x in nodes(tree) if isinstance(x, MNode) and x.kind == PRIME), default=0)
        extra["k"] = k
        return g, triangle_packing_modular(g, KModularCertificate(tree, k)).packing, extra
    raise UsageError(f"unknown class {cls!r}")


def cmd_solve(args) -> int:
    t0 = time.perf_counter()
    g, packing, extra = _solve_graph(args)
    elapsed = (time.perf_counter() - t0) * 1000
    if packing is not None:
        if not verify_packing(g, packing):
            raise InternalError("solver output failed re-verification")
        if args.problem == "partition" and not is_partition(g, packing):
            packing = None  # a maximum packing that misses vertices
    if packing is None:
        print("no partition")
        _stats(args, **extra, **{"time-ms": f"{elapsed:.3f}", "size": 0})
        return NO
    _emit(io.format_packing(packing), args.out)
    _stats(args, **extra, **{"time-ms": f"{elapsed:.3f}", "size": len(packing)})
    return OK


# ---------------------------------------------------------------------------
# other subcommands


def cmd_oracle(args) -> int:
    kind, r = io.parse_kind(args.kind)
    g = io.load(args.input, io.parse_graph)
    t0 = time.perf_counter()
    if args.problem == "partition":
        packing = pattern_partition_exact(g, kind, r, allow_large=args.allow_large)
        nodes_ = None
    else:
        res = max_pattern_packing_exact(g, kind, r, memo=args.memo, allow_large=args.allow_large)
        packing, nodes_ = res.witness, res.nodes_explored
    elapsed = (time.perf_counter() - t0) * 1000
    if packing is None:
        print("no partition")
        return NO
    _emit(io.format_packing(packing), args.out)
    _stats(args, **({} if nodes_ is None else {"nodes": nodes_}), **{"time-ms": f"{elapsed:.3f}", "size": len(packing)})
    return OK


def cmd_gen(args) -> int:
    cfg = GenConfig(seed=_seed(args), n=args.n, planted=args.planted, p=args.p)
    c = args.cls
    if c == "interval":
        text = io.format_intervals(gen_interval(cfg))
    elif c == "permutation":
        text = io.format_permutation(gen_permutation(cfg))
    elif c == "colored-perm":
        cp = gen_colored_perm(cfg, args.r or 3)
        text = io.format_permutation(cp.model)
        if args.colors_out:
            Path(args.colors_out).write_text(io.format_colors(cp))
        else:
            print("note: pass --colors-out to save the colors file", file=sys.stderr)
    elif c == "multipartite":
        text = io.format_sizes(gen_multipartite(cfg))
    elif c == "bipperm":
        text = io.format_bipartite(gen_bipperm(cfg))
    elif c == "cobipartite":
        text = io.format_cobipartite(gen_cobipartite(cfg))
    elif c == "copartite":
        text = io.format_copartite(gen_copartite(cfg, args.k or 3))
    elif c == "dh":
        text = io.format_construction(gen_dh_steps(cfg))
    elif c == "modular":
        g, tree = gen_modular(cfg, args.k or 0)
        text = io.format_graph(g)
        if args.tree_out:
            Path(args.tree_out).write_text(io.format_modular_tree(tree))
    elif c == "graph":
        import random
        from itertools import combinations

        rng = random.Random(cfg.seed)
        p = 0.5 if cfg.p is None else cfg.p
        text = io.format_graph(
            Graph.from_edges(cfg.n, [e for e in combinations(range(1, cfg.n + 1), 2) if rng.random() < p])
        )
    elif c == "3dm":
        text = io.format_3dm(gen_3dm(cfg))
    else:
        raise UsageError(f"unknown class {c!r}")
    _emit(text, args.out)
    return OK


def cmd_reduce(args) -> int:
    if args.source != "3dm":
        raise UsageError("only --from 3dm is supported")
    inst = io.load(args.input, io.parse_3dm)
    _emit(io.format_gadget(reduce(inst)), args.out)
    return OK


def cmd_check(args) -> int:
    g = io.load(args.graph, io.parse_graph)
    p = io.load(args.packing, io.parse_packing)
    ok = verify_packing(g, p) and (not args.partition or is_partition(g, p))
    print("valid" if ok else "invalid")
    return OK if ok else NO


def cmd_count(args) -> int:
    print(count_partitionable_permutations(args.triples, allow_slow=args.slow))
    return OK


def _bench_cases() -> list[tuple[str, Callable[[], object]]]:
    cases: list[tuple[str, Callable[[], object]]] = []
    for n in (15, 30, 45):
        m = gen_interval(GenConfig(seed=n, n=n))
        cases.append((f"interval-partition-n{n}", lambda m=m: triangle_partition_interval(m)))
        if n <= 30:  # the packing search is exponential
            cases.append((f"interval-packing-n{n}", lambda m=m: triangle_packing_interval_exp(m)))
    for n in (60, 300):
        cp = gen_colored_perm(GenConfig(seed=n, n=n, planted=True), 3)
        cases.append((f"colored-perm-n{n}", lambda cp=cp: colored_partition(cp)))
    for n in (40, 200):
        bm = gen_bipperm(GenConfig(seed=n, n=n))
        cases.append((f"bipperm-n{n}", lambda bm=bm: c4_packing_bipperm(bm)))
    for n in (30, 60):
        g, t = dh_tree_from_construction(gen_dh_steps(GenConfig(seed=n, n=n)))
        cases.append((f"dh-n{n}", lambda g=g, t=t: triangle_packing_dh(g, t)))
        gm, tm = gen_modular(GenConfig(seed=n, n=n), 5)
        cases.append((f"modular-k5-n{n}", lambda g=gm, t=tm: triangle_packing_modular(g, KModularCertificate(t, 5))))
    for n in (15, 30):
        cm = gen_copartite(GenConfig(seed=n, n=n, p=0.3), 4)
        cases.append((f"copartite-k4-n{n}", lambda cm=cm: triangle_partition_co_kpartite(cm)))
    return cases


def cmd_bench(args) -> int:
    if args.suite != "default":
        raise UsageError(f"unknown suite {args.suite!r}")

    def run(case):
        name, fn = case
        t0 = time.perf_counter()
        fn()
        return name, (time.perf_counter() - t0) * 1000

    cases = _bench_cases()
    if args.threads > 1:
        with ThreadPoolExecutor(args.threads) as pool:
            results = list(pool.map(run, cases))
    else:
        results = [run(c) for c in cases]
    for name, ms in results:
        print(f"{name} time-ms={ms:.3f}")
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tripack", description="Triangle and square packing on structured graph classes.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run the class-specific solver")
    s.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    s.add_argument("--problem", choices=("partition", "packing"), default="partition")
    s.add_argument("--input", required=True)
    s.add_argument("--out")
    s.add_argument("--colors", help="colors file (colored-perm)")
    s.add_argument("--colors-on", choices=("values", "positions"), default="values")
    s.add_argument("--r", type=int, help="tuple size for colored-perm (default: max color)")
    s.add_argument("--tree", help="DH tree or modular tree file")
    s.add_argument("--k", type=int, help="prime-node bound for modular certificates")
    s.add_argument("--unsound-cap", type=int, help="cap on cross triangles (copartite); may lose completeness")
    s.add_argument("--allow-large", action="store_true")
    s.add_argument("--stats", action="store_true", help="print key=value statistics")
    s.add_argument("--threads", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    o = sub.add_parser("oracle", help="exact exponential search")
    o.add_argument("--kind", default="triangle", help="triangle | square | kr:<r>")
    o.add_argument("--problem", choices=("partition", "packing"), default="packing")
    o.add_argument("--input", required=True)
    o.add_argument("--out")
    o.add_argument("--memo", action="store_true")
    o.add_argument("--allow-large", action="store_true")
    o.add_argument("--stats", action="store_true")
    o.add_argument("--threads", type=int, default=1)
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--class", dest="cls", required=True, choices=GEN_CLASSES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, help="defaults to $TRIPACK_SEED, then 0")
    g.add_argument("--k", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--p", type=float, help="cross/edge probability")
    g.add_argument("--planted", action="store_true")
    g.add_argument("--out")
    g.add_argument("--colors-out")
    g.add_argument("--tree-out")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("reduce", help="build the square-packing gadget graph")
    r.add_argument("--from", dest="source", required=True, choices=("3dm",))
    r.add_argument("--input", required=True)
    r.add_argument("--out")
    r.set_defaults(func=cmd_reduce)

    c = sub.add_parser("check", help="verify a packing file against a graph")
    c.add_argument("--packing", required=True)
    c.add_argument("--graph", required=True)
    c.add_argument("--partition", action="store_true", help="also require every vertex covered")
    c.set_defaults(func=cmd_check)

    n = sub.add_parser("count", help="count permutations that split into increasing triples")
    n.add_argument("--triples", type=int, required=True)
    n.add_argument("--slow", action="store_true", help="allow the 4-triple enumeration")
    n.set_defaults(func=cmd_count)

    b = sub.add_parser("bench", help="time the polynomial solvers")
    b.add_argument("--suite", default="default")
    b.add_argument("--threads", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except TripackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INSTANCE
    except (InternalError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
