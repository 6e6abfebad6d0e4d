"""Command-line entry point: ``ekr analyze | ekr | sweep | product | verify-paper``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from contextlib import ExitStack

from .engine import ekr_status
from .graph6 import from_graph6, to_graph6
from .graphs import NAMES, Graph, GraphError, complete_graph, lex_product, parse_named
from .independent import independence_number, independent_r_sets, max_star, minimax_independence
from .multipartite import StructureError, parse_structure
from .search import SearchLimitExceeded

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_CLAIM = 4
EXIT_COUNTEREXAMPLE = 5

_STRUCTURE_RE = re.compile(r"^\s*\d+(\s*,\s*\d+)*\s*\+\s*\d+(\s*,\s*\d+)*\s*$")


def parse_graph_spec(text: str) -> Graph:
    """Named identifier, two-graph multipartite spec ``b1,b2+d1,d2``, or graph6."""
    if _STRUCTURE_RE.match(text):
        M, resorted = parse_structure(text.replace(" ", ""))
        if resorted:
            print(f"note: part sizes sorted to {M.graph.label}", file=sys.stderr)
        return M.graph
    name = text.split("(", 1)[0].strip()
    if name in NAMES:
        return parse_named(text)
    try:
        return from_graph6(text).relabel(text.strip())
    except GraphError as exc:
        raise GraphError(f"cannot read {text!r} as a graph name, multipartite spec or graph6: {exc}") from None


def _graph_arg(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("graph", help="graph name (e.g. icosahedron, spiky_G(3,4)), '3,3+3,3', or graph6")


def cmd_analyze(args) -> int:
    g = parse_graph_spec(args.graph)
    alpha = independence_number(g) if g.n else 0
    mu = minimax_independence(g) if g.n else 0
    table = []
    for r in range(1, alpha + 1):
        fam = independent_r_sets(g, r)
        size, centres = max_star(g, r, fam)
        table.append({"r": r, "family": len(fam), "max_star": size, "centres": centres})
    if args.json:
        print(json.dumps({"graph": g.label, "n": g.n, "edges": g.edge_count(), "alpha": alpha,
                          "mu": mu, "table": table}, indent=2))
        return EXIT_OK
    print(f"graph {g.label}: n={g.n} edges={g.edge_count()} alpha={alpha} mu={mu}")
    print(f"{'r':>3} {'|I^(r)|':>9} {'max star':>9}")
    for row in table:
        print(f"{row['r']:>3} {row['family']:>9} {row['max_star']:>9}")
    return EXIT_OK


def cmd_ekr(args) -> int:
    g = parse_graph_spec(args.graph)
    if args.r < 1:
        raise GraphError("r must be at least 1")
    rep = ekr_status(g, args.r, exact_anomalous=not args.decide)
    data = rep.as_dict(witness_limit=args.witness_limit)
    if args.json:
        print(json.dumps(data, indent=2))
        return EXIT_OK
    sizes = data["sizes"]
    print(f"graph {data['graph']}  r={rep.r}" + ("  (r > alpha: vacuous)" if rep.vacuous else ""))
    print(f"  |I^(r)|            {sizes['family']}")
    print(f"  max star           {sizes['max_star']}  at {rep.star_centres}")
    print(f"  max intersecting   {sizes['max_intersecting']}")
    print(f"  max anomalous      {sizes['max_anomalous']}")
    print(f"  r-EKR              {'yes' if rep.is_ekr else 'no'}")
    print(f"  strictly r-EKR     {'yes' if rep.is_strictly_ekr else 'no'}")
    print(f"  r-centres          {rep.centres}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .sweep import run_sweep

    with ExitStack() as stack:
        src = sys.stdin if args.input == "-" else stack.enter_context(open(args.input))
        out = sys.stdout if args.out == "-" else stack.enter_context(open(args.out, "w", newline=""))
        summary = run_sweep(src, out, max_n=args.max_n, jobs=args.jobs)
    for err in summary.errors:
        print(f"malformed: {err}", file=sys.stderr)
    print(f"graphs={summary.graphs} malformed={summary.malformed} "
          f"counterexamples={summary.counterexamples} strict_violations={summary.strict_violations}",
          file=sys.stderr)
    return EXIT_OK if summary.clean else EXIT_COUNTEREXAMPLE


def cmd_product(args) -> int:
    g = parse_graph_spec(args.graph)
    if args.m < 1:
        raise GraphError("m must be at least 1")
    print(to_graph6(lex_product(g, complete_graph(args.m))))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .claims import CLAIMS, run_claim

    failed = 0
    wanted = set(args.only) if args.only else None
    for number, *_ in CLAIMS:
        if wanted and number not in wanted:
            continue
        kwargs = {"max_n": args.max_sweep_order} if number == 14 else {}
        res = run_claim(number, **kwargs)
        print(res.line(timing=args.timings), flush=True)
        if args.verbose:
            for d in res.detail:
                print(f"      {d}")
        failed += not (res.passed and res.within_budget)
    print(f"{failed} claim(s) failed")
    return EXIT_CLAIM if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ekr", description="Exact EKR properties of graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="order, alpha, mu and star sizes")
    _graph_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("ekr", help="r-EKR and strict r-EKR verdict")
    _graph_arg(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--decide", action="store_true",
                   help="only decide strictness instead of computing the exact anomalous maximum")
    p.add_argument("--witness-limit", type=int, default=100)
    p.set_defaults(func=cmd_ekr)

    p = sub.add_parser("sweep", help="check r <= mu/2 over a graph6 stream")
    p.add_argument("--in", dest="input", default="-", help="graph6 file, or - for stdin")
    p.add_argument("--out", default="-", help="CSV output, or - for stdout")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("product", help="graph6 of G[K_m]")
    _graph_arg(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify-paper", help="run the table of numeric claims")
    p.add_argument("--max-sweep-order", type=int, default=8)
    p.add_argument("--only", type=int, nargs="*")
    p.add_argument("--timings", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, StructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SearchLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
