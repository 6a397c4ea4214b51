"""Command-line entry point.

Every subcommand prints one JSON document on stdout. Exit codes: 0 success,
1 a checked bound/claim/certificate failed, 2 usage, parse or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import graph as G
from .bounds import check_theorem
from .corpus import build_corpus, min_perc_sweep, small_corpus, sweep
from .degeneracy import compute_ordering
from .errors import BootpercError, BudgetExceeded, CertificationError
from .extremal import ExtremalParams, build_extremal, certify_extremal, extremal_ratio
from .minperc import DEFAULT_BUDGET, minperc_report
from .percolation import run
from .potential import compute_potential_trace, verify_claim


class UsageError(Exception):
    pass


def _emit(payload: dict, args: argparse.Namespace) -> None:
    indent = args.json_indent if args.json_indent else None
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=indent) + "\n")


def _load_graph(args: argparse.Namespace) -> G.Graph:
    if not args.graph:
        raise UsageError("--graph FILE is required")
    try:
        return G.read_edge_list(args.graph)
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc.strerror}") from None


def _parse_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def _load_a0(args: argparse.Namespace, g: G.Graph) -> frozenset[int]:
    given = [x is not None for x in (args.a0, args.a0_file, args.a0_bernoulli, args.a0_size)]
    if sum(given) != 1:
        raise UsageError("give exactly one of --a0, --a0-file, --a0-bernoulli, --a0-size")
    if args.a0 is not None:
        members = _parse_list(args.a0)
    elif args.a0_file is not None:
        with open(args.a0_file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
        members = _parse_list(",".join(lines))
    elif args.a0_bernoulli is not None:
        return G.sample_bernoulli(g, args.a0_bernoulli, args.seed)
    else:
        return G.sample_fixed_size(g, args.a0_size, args.seed)
    return G.vertex_set(g, members)


def cmd_degeneracy(args: argparse.Namespace) -> int:
    ordering = compute_ordering(_load_graph(args))
    _emit({"d": ordering.d, "order": list(ordering.order)}, args)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    trace = run(g, _load_a0(args, g), args.r)
    _emit(trace.to_json(), args)
    return 0


def cmd_potential(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    trace = run(g, _load_a0(args, g), args.r)
    pt = compute_potential_trace(g, compute_ordering(g), trace)
    payload = pt.to_json()
    _emit(payload, args)
    return 1 if payload["claim_holds"] is False else 0


def cmd_extremal(args: argparse.Namespace) -> int:
    p = ExtremalParams(args.d, args.r, args.k)
    g, a0 = build_extremal(p)
    payload = {
        "n": g.n,
        "m": g.m,
        "edge_list": G.to_edge_list(g),
        "a0": sorted(a0),
        "ratio": str(extremal_ratio(p)),
    }
    status = 0
    if args.certify:
        try:
            cert = certify_extremal(p)
        except CertificationError as exc:
            payload["certified"] = False
            payload["failed_clause"] = exc.clause
            status = 1
        else:
            payload["certified"] = True
            payload["certificate"] = cert.to_json()
            payload["sharp_at_eps_0.01"] = cert.is_sharp(Fraction(1, 100))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(G.to_edge_list(g) + "\n")
    _emit(payload, args)
    return status


def cmd_check_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    rep = check_theorem(g, _load_a0(args, g), args.r, d=args.d)
    _emit(rep.to_json(), args)
    return 1 if False in (rep.theorem_holds, rep.runtime_corollary_holds) else 0


def cmd_minperc(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    try:
        rep = minperc_report(g, args.r, args.budget, enumerate_all=args.enumerate)
    except BudgetExceeded as exc:
        print(f"error: {exc}; forced vertices: {sorted(exc.forced)}", file=sys.stderr)
        return 2
    _emit(rep.to_json(), args)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    g = G.generate(args.kind, args.n, seed=args.seed, p=args.p)
    text = G.to_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    _emit({"kind": args.kind, "seed": args.seed, "n": g.n, "m": g.m, "edge_list": text}, args)
    return 0


def cmd_corpus_check(args: argparse.Namespace) -> int:
    summary = sweep(build_corpus(args.seed), args.seed)
    payload = summary.to_json()
    ok = summary.ok
    if args.minperc_budget > 0:
        mp = min_perc_sweep(small_corpus(args.seed), args.minperc_budget)
        payload["min_perc"] = {
            "checked": mp.checked,
            "skipped_budget": mp.skipped_budget,
            "violations": mp.violations,
        }
        ok = ok and not mp.violations
        payload["ok"] = ok
    _emit(payload, args)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", metavar="FILE", help="graph in edge-list format")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json-indent", type=int, default=0, metavar="N")

    a0_opts = argparse.ArgumentParser(add_help=False)
    a0_opts.add_argument("--a0", metavar="LIST", help="comma-separated vertex ids")
    a0_opts.add_argument("--a0-file", metavar="FILE", help="one vertex id per line")
    a0_opts.add_argument("--a0-bernoulli", type=float, metavar="P")
    a0_opts.add_argument("--a0-size", type=int, metavar="K")
    a0_opts.add_argument("--r", type=int, required=True)

    parser = argparse.ArgumentParser(prog="bootperc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("degeneracy", parents=[common], help="degeneracy and ordering")
    p.set_defaults(func=cmd_degeneracy)

    p = sub.add_parser("simulate", parents=[common, a0_opts], help="run the process")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("potential", parents=[common, a0_opts], help="potential sequence")
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("extremal", parents=[common], help="near-tight construction")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certify", action="store_true")
    p.add_argument("--out", metavar="FILE", help="also write the edge list here")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("check-bounds", parents=[common, a0_opts], help="final-size bound")
    p.add_argument("--d", type=int, default=None, help="override d (>= degeneracy)")
    p.set_defaults(func=cmd_check_bounds)

    p = sub.add_parser("minperc", parents=[common], help="minimal percolating sets")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_minperc)

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("kind", choices=G.GENERATOR_KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("corpus-check", parents=[common], help="randomized bound sweep")
    p.add_argument("--minperc-budget", type=int, default=12,
                   help="free-vertex cap for the smallest-set sweep (0 skips it)")
    p.set_defaults(func=cmd_corpus_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BootpercError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
