"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or a sweep value above 2),
2 parse or input error, 3 class precondition violated, 4 budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .coloring import TotalColoring, verify_tlir
from .errors import BudgetExhausted, InputError, InvariantError, PreconditionError
from .graph import TotalGraph, classify
from .io import format_coloring, format_graph, read_coloring, read_graph, to_dot
from .oracle import BUDGET, UNCOLORABLE, SearchBudget, exact_acyclic, exact_lir, exact_tlir

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_CLASS, EXIT_BUDGET = 0, 1, 2, 3, 4

ALGOS = ("auto", "bipartite", "cactus", "subcubic", "split", "chromatic", "outerplanar", "planar", "oracle")
DEFAULT_BUDGET_MS = 60_000

log = logging.getLogger("tlir")


def _budget(args, max_colors: int = 6) -> SearchBudget:
    ms = args.budget
    if ms is None:
        env = os.environ.get("TLIR_BUDGET_MS")
        try:
            ms = int(env) if env else DEFAULT_BUDGET_MS
        except ValueError:
            raise InputError(f"TLIR_BUDGET_MS must be an integer, got {env!r}") from None
    if ms <= 0:
        raise InputError("budget must be positive")
    return SearchBudget(max_colors=max_colors, node_limit=args.node_limit, time_limit=ms / 1000)


# ---------------------------------------------------------------------------
# color
# ---------------------------------------------------------------------------

def _oracle_coloring(G: TotalGraph, budget: SearchBudget) -> TotalColoring:
    res = exact_tlir(G, budget)
    if res.status == BUDGET:
        raise BudgetExhausted("exact search did not finish within budget")
    return res.witness


def _per_component(G: TotalGraph, solve) -> TotalColoring:
    c = TotalColoring()
    for comp in G.components():
        c.update(solve(G.subgraph(comp)))
    return c


def run_algo(G: TotalGraph, algo: str, budget: SearchBudget) -> TotalColoring:
    from .bipartite import bipartite_tlir2
    from .cactus import cactus_tlir2
    from .chromatic import chromatic_tlir
    from .acyclic import outerplanar_tlir3, planar_tlir_k
    from .split import split_tlir2
    from .subcubic import regular_layered_tlir2, subcubic_tlir2

    if algo == "bipartite":
        return bipartite_tlir2(G)
    if algo == "cactus":
        return cactus_tlir2(G)
    if algo == "subcubic":
        return subcubic_tlir2(G)
    if algo == "split":
        return split_tlir2(G, budget)
    if algo == "regular":
        return regular_layered_tlir2(G)
    if algo == "chromatic":
        return _per_component(G, lambda H: chromatic_tlir(H, budget=budget))
    if algo == "outerplanar":
        return outerplanar_tlir3(G, budget)
    if algo == "planar":
        return planar_tlir_k(G, 5, budget=budget)
    if algo == "oracle":
        return _oracle_coloring(G, budget)
    raise InputError(f"unknown algorithm {algo!r}")


def auto_route(H: TotalGraph) -> str:
    """Route with the smallest guaranteed bound for one component."""
    rep = classify(H)
    if not rep.all_full:
        return "oracle"
    for name, ok in (
        ("bipartite", rep.is_bipartite),
        ("cactus", rep.is_cactus),
        ("subcubic", rep.is_subcubic),
        ("split", rep.is_split),
        ("regular", rep.is_regular),
        ("outerplanar", rep.is_outerplanar),
        ("planar", rep.is_planar),
    ):
        if ok:
            return name
    return "chromatic"


def auto_color(G: TotalGraph, budget: SearchBudget) -> tuple[TotalColoring, list[str]]:
    c, routes = TotalColoring(), []
    for comp in G.components():
        H = G.subgraph(comp)
        route = auto_route(H)
        try:
            part = run_algo(H, route, budget)
        except (BudgetExhausted, PreconditionError) as exc:
            if route != "chromatic":
                raise
            log.info("chromatic route failed (%s); using exact search", exc)
            route, part = "oracle", _oracle_coloring(H, budget)
        routes.append(route)
        c.update(part)
    return c, routes


def cmd_color(args) -> int:
    G = read_graph(args.inp)
    budget = _budget(args)
    if args.algo == "auto":
        c, routes = auto_color(G, budget)
        route = ",".join(sorted(set(routes))) or "empty"
    else:
        c, route = run_algo(G, args.algo, budget), args.algo
    report = verify_tlir(G, c, require_total=True)
    if not report.valid:
        print("internal error: coloring failed verification", file=sys.stderr)
        for v in report.violations:
            print(v, file=sys.stderr)
        return EXIT_INVALID
    Path(args.out).write_text(format_coloring(c))
    if args.dot:
        Path(args.dot).write_text(to_dot(G, c))
    print(f"route {route} colors {c.num_colors}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / oracle / gen / sweep
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    G = read_graph(args.graph)
    c = read_coloring(args.coloring)
    report = verify_tlir(G, c, require_total=not args.partial)
    if report.valid:
        print("VALID")
        return EXIT_OK
    for v in report.violations:
        print(v)
    for kind, key in report.uncolored:
        print(f"uncolored vertex {key}" if kind == "v" else f"uncolored edge {key[0]} {key[1]}")
    return EXIT_INVALID


def cmd_oracle(args) -> int:
    G = read_graph(args.graph)
    budget = _budget(args, args.max_colors)
    if args.mode == "tlir":
        res = exact_tlir(G, budget)
    elif args.mode == "lir":
        res = exact_lir(G, budget)
    else:
        res = exact_acyclic(G, budget)
    if res.ok:
        print(res.value)
        return EXIT_OK
    if res.status == UNCOLORABLE:
        print("UNCOLORABLE")
        return EXIT_OK
    print("UNKNOWN")
    return EXIT_BUDGET


def _param(text: str) -> tuple[str, object]:
    if "=" not in text:
        raise InputError(f"parameter must look like key=value, got {text!r}")
    key, raw = text.split("=", 1)
    for conv in (int, float):
        try:
            return key, conv(raw)
        except ValueError:
            pass
    return key, {"true": True, "false": False, "none": None}.get(raw.lower(), raw)


def cmd_gen(args) -> int:
    from .generators import gen

    params = dict(_param(p) for p in args.param)
    G = gen(args.cls, args.n, args.seed, **params)
    text = format_graph(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _sweep_one(item: tuple[int, int, TotalGraph, SearchBudget]) -> tuple[int, int, int | None]:
    idx, n, G, budget = item
    res = exact_tlir(G, budget)
    return idx, n, res.value if res.ok else None


def cmd_sweep(args) -> int:
    from .generators import enumerate_connected

    if not 1 <= args.n_max <= 7:
        raise InputError("--n-max must be between 1 and 7")
    budget = _budget(args)
    items = [(i, n, G, budget) for i, (n, G) in enumerate(
        (n, G) for n in range(1, args.n_max + 1) for G in enumerate_connected(n)
    )]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_one, items, chunksize=8))
    else:
        results = [_sweep_one(it) for it in items]
    results.sort()
    worst, unknown = 0, 0
    for n in range(1, args.n_max + 1):
        vals = [v for _, m, v in results if m == n]
        known = [v for v in vals if v is not None]
        unknown += len(vals) - len(known)
        print(f"n={n} graphs {len(vals)} max tlir {max(known, default=0)}")
        worst = max([worst, *known])
    over = [idx for idx, _, v in results if v is not None and v > 2]
    print(f"max tlir observed = {worst}")
    if over:
        print(f"graphs above 2: {over}")
        return EXIT_INVALID
    if unknown:
        print(f"undecided within budget: {unknown}")
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tlir", description="Locally irregular total colorings.")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    def budget_flags(sp):
        sp.add_argument("--budget", type=int, default=None, metavar="MS",
                        help="search time limit in milliseconds (default: $TLIR_BUDGET_MS or 60000)")
        sp.add_argument("--node-limit", type=int, default=None, help="search node limit")

    sp = sub.add_parser("color", help="color a graph and write a verified coloring")
    sp.add_argument("--algo", choices=ALGOS, default="auto")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--dot")
    budget_flags(sp)
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("verify", help="check a coloring against a graph")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--partial", action="store_true", help="allow uncolored elements")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="exact tlir, lir or acyclic chromatic number")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--mode", choices=("tlir", "lir", "acyclic"), default="tlir")
    sp.add_argument("--max-colors", type=int, default=6)
    budget_flags(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("gen", help="write a seeded random graph")
    sp.add_argument("--class", dest="cls", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("sweep", help="exact tlir of every connected graph up to n vertices")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    budget_flags(sp)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CLASS
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
