"""Command-line entry point: ``domset {solve,oracle,gen,check,verify-claims,fuzz}``.

Exit codes: 0 success, 1 proof or corollary violation (state dumped to
stderr), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from .discharge import verify_terminal
from .generators import GeneratorSpec, InfeasibleSpec, generate
from .graph import GraphFormatError, classical_bounds, degree_stats, read_graph, serialize_graph
from .harness import fuzz
from .oracle import OracleInconclusive, minimum_dominating_set
from .residual import SCHEMES, SchemeMismatch, WeightScheme, build_residual, scheme_for
from .rules import ProofViolation, extend_independent_set, is_independent, solve

log = logging.getLogger("domset")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2
LOG_LEVELS = {"quiet": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}
MODEL_NAMES = {"regular": "regular", "mindeg": "min_degree", "named": "named"}


class UsageError(Exception):
    pass


def _read_ids(path: str) -> list[int]:
    ids = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if not line.isdigit():
                raise UsageError(f"{path}:{lineno}: expected a vertex id, got {line!r}")
            ids.append(int(line))
    return ids


def _pick_scheme(name: Optional[str], g) -> WeightScheme:
    if name is None:
        try:
            return scheme_for(g)
        except SchemeMismatch as exc:
            raise UsageError(str(exc)) from None
    scheme = SCHEMES[name]
    if g.n and g.min_degree < scheme.degree_floor:
        raise UsageError(f"scheme {name} needs min degree >= {scheme.degree_floor}, "
                         f"graph has {g.min_degree}")
    return scheme


def cmd_solve(args, out) -> int:
    g = read_graph(args.input)
    scheme = _pick_scheme(args.scheme, g)
    initial = _read_ids(args.initial_set) if args.initial_set else []
    if any(not 0 <= v < g.n for v in initial):
        raise UsageError("initial set has out-of-range ids")
    corollary = (bool(initial) and scheme.id == "d5" and all(d == 5 for d in g.degrees())
                 and is_independent(g, initial))
    result = extend_independent_set(g, initial) if corollary else solve(g, scheme, initial)
    text = result.trace_jsonl()
    out.write(text)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    log.info("|D| = %d, bound %d", len(result.dominating_set), result.bound)
    if result.findings:
        for f in result.findings:
            print(json.dumps({"finding": f, "D": list(result.dominating_set),
                              "S": sorted(initial), "graph": serialize_graph(g)}),
                  file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g = read_graph(args.input)
    try:
        res = minimum_dominating_set(g, node_limit=args.node_limit,
                                     max_n=None if args.force else 32)
    except OracleInconclusive as exc:
        raise UsageError(f"inconclusive: {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(json.dumps({"gamma": res.gamma, "witness": list(res.witness),
                          "nodes_explored": res.nodes_explored}) + "\n")
    return EXIT_OK


def cmd_gen(args, out) -> int:
    spec = GeneratorSpec(MODEL_NAMES[args.model], args.n, args.d, args.seed, args.name)
    try:
        g = generate(spec)
    except InfeasibleSpec as exc:
        raise UsageError(str(exc)) from None
    text = serialize_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_check(args, out) -> int:
    g = read_graph(args.input)
    stats = degree_stats(g)
    b = classical_bounds(g.n, stats.min_degree)
    rows = [("n", str(g.n)), ("min degree", str(stats.min_degree)),
            ("max degree", str(stats.max_degree)),
            ("arnautov", f"{float(b.arnautov):.4f} ({b.arnautov})"),
            ("alon", f"{b.alon:.4f}"),
            ("theorem bound", "-" if b.theorem_bound is None else str(b.theorem_bound))]
    if stats.min_degree >= 4:
        res = solve(g, scheme_for(g))
        rows.append((f"solver |D| ({res.scheme})", str(len(res.dominating_set))))
    else:
        rows.append(("solver |D|", "-"))
    if g.n <= 32:
        rows.append(("oracle gamma", str(minimum_dominating_set(g).gamma)))
    else:
        rows.append(("oracle gamma", "- (n > 32)"))
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        out.write(f"{k:<{width}}  {v}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = read_graph(args.input)
    scheme = _pick_scheme(args.scheme, g)
    chosen = _read_ids(args.set)
    try:
        r = build_residual(g, chosen)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(verify_terminal(r, scheme).to_json() + "\n")
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    if lo > hi or lo < 1:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def cmd_fuzz(args, out) -> int:
    lo, hi = args.n_range
    scheme = SCHEMES[args.scheme]
    if hi <= scheme.degree_floor:
        raise UsageError(f"n range must exceed the degree floor {scheme.degree_floor}")
    audits = fuzz(args.scheme, args.count, lo, hi, args.seed, jobs=args.jobs)
    bad = [a for a in audits if not a.ok]
    for a in bad:
        print(json.dumps({"spec": a.spec.__dict__, "failures": a.failures,
                          "violation": a.violation}), file=sys.stderr)
    summary = {"scheme": args.scheme, "count": len(audits), "passed": len(audits) - len(bad),
               "failed": len(bad), "terminal_certified": sum(a.terminal_checked for a in audits),
               "max_ratio": max((a.size / a.n for a in audits), default=0.0)}
    out.write(json.dumps(summary) + "\n")
    return EXIT_VIOLATION if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domset", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run the move system and print its trace")
    s.add_argument("--scheme", choices=sorted(SCHEMES))
    s.add_argument("--initial-set", metavar="FILE")
    s.add_argument("--trace", metavar="FILE")
    s.add_argument("input")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("oracle", help="exact domination number")
    s.add_argument("--node-limit", type=int, default=5_000_000)
    s.add_argument("--force", action="store_true", help="allow n > 32")
    s.add_argument("input")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="write a generated graph")
    s.add_argument("--model", choices=sorted(MODEL_NAMES), required=True)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--d", type=int, default=0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--name")
    s.add_argument("-o", "--output", metavar="FILE")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check", help="bound table for a graph")
    s.add_argument("input")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("verify-claims", help="discharging report for a chosen set")
    s.add_argument("--scheme", choices=sorted(SCHEMES))
    s.add_argument("--set", required=True, metavar="FILE")
    s.add_argument("input")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("fuzz", help="audit seeded random instances")
    s.add_argument("--scheme", choices=sorted(SCHEMES), required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--n-range", type=_parse_range, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_fuzz)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    level = os.environ.get("DOMSET_LOG", "quiet")
    logging.basicConfig(level=LOG_LEVELS.get(level, logging.ERROR), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ProofViolation as exc:
        print(exc.to_json(), file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, GraphFormatError, InfeasibleSpec, SchemeMismatch, OSError) as exc:
        print(f"domset: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
