"""Command-line front end.

Exit codes: 0 all checks passed (or pure enumeration), 1 check failure,
2 input error, 3 conjecture counterexample (with no other failure).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .configs import (
    LONG_RUN_THRESHOLD,
    REFERENCE_COUNTS,
    Config,
    InvalidConfigError,
    RealizationError,
    canonical_forms,
    count_canonical_configs,
    is_valid_config,
    iter_raw_configs,
    iter_valid_configs,
    realize_config,
)
from .digraph import Cycle, Digraph, enumerate_cycles, is_strongly_connected, is_transitive_arc
from .files import DigraphParseError, format_digraph, load_digraph
from .msd import check_msd_invariants, is_msd, msd_summary, random_msd
from .report import CheckReport, flatten
from .structure import decompose, run_structure_checks

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CONJECTURE = 3


def _document(argv: Sequence[str], checks: list[CheckReport], extra: dict[str, Any]) -> dict[str, Any]:
    leaves = flatten(checks)
    doc = {
        "tool": f"msdcycles {__version__}",
        "command": list(argv),
        "checks": [c.to_dict() for c in checks],
        "summary": {
            "total": len(leaves),
            "passed": sum(c.passed for c in leaves),
            "failed": sum(not c.passed for c in leaves),
            "conjecture_counterexamples": sum(
                c.is_conjecture_counterexample for c in checks
            ),
        },
    }
    doc.update(extra)
    return doc


def _render_checks(checks: list[CheckReport]) -> None:
    for leaf in flatten(checks):
        mark = "PASS" if leaf.passed else "FAIL"
        line = f"[{mark}] {leaf.name}"
        if leaf.notes:
            line += f"  ({leaf.notes})"
        print(line)
        for w in leaf.witnesses:
            print(f"       witness: {json.dumps(w, sort_keys=True)}")


def _exit_code(checks: list[CheckReport]) -> int:
    conjecture = [c for c in checks if c.is_conjecture_counterexample]
    ordinary_failures = [
        c for c in checks if not c.passed and not c.is_conjecture_counterexample
    ]
    if ordinary_failures:
        return EXIT_CHECK_FAILED
    if conjecture:
        return EXIT_CONJECTURE
    return EXIT_OK


def _finish(argv: Sequence[str], checks: list[CheckReport], extra: dict[str, Any], args) -> int:
    doc = _document(argv, checks, extra)
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        _render_checks(checks)
    return _exit_code(checks)


def _load_input(path: str) -> Digraph:
    try:
        return load_digraph(path)
    except FileNotFoundError:
        raise DigraphParseError(f"no such file: {path}", 0)


def cmd_verify(args, argv: Sequence[str]) -> int:
    d = _load_input(args.input)
    if d.n < 2 or not is_msd(d):
        witness = _not_msd_witness(d)
        print(f"not a minimal strong digraph: {witness}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    summary = msd_summary(d)
    report = check_msd_invariants(d)
    if not args.json:
        print(
            f"MSD: n={summary.n} m={summary.m}"
            f" linear={sorted(summary.linear)}"
            f" longest_cycle={summary.longest_cycle}"
            f" bounds=[{summary.lower_bound_l}, {summary.upper_bound_l}]"
        )
    extra = {
        "summary_msd": {
            "n": summary.n,
            "m": summary.m,
            "linear": sorted(summary.linear),
            "longest_cycle": summary.longest_cycle,
            "longest_cycle_bounds": [summary.lower_bound_l, summary.upper_bound_l],
        }
    }
    return _finish(argv, [report], extra, args)


def _not_msd_witness(d: Digraph) -> str:
    if d.n < 2:
        return "order < 2"
    if not is_strongly_connected(d):
        return "not strongly connected"
    for u, v in d.sorted_arcs():
        if is_transitive_arc(d, u, v):
            return f"transitive arc {u}->{v}"
    return "unknown"


def cmd_analyze(args, argv: Sequence[str]) -> int:
    d = _load_input(args.input)
    try:
        vertices = tuple(int(p) for p in args.cycle.split(","))
        cycle = Cycle(vertices)
    except ValueError as exc:
        raise DigraphParseError(f"bad cycle {args.cycle!r}: {exc}", 0)
    if d.n < 2 or not is_msd(d):
        raise DigraphParseError(
            f"input is not a minimal strong digraph ({_not_msd_witness(d)})", 0
        )
    if not cycle.is_cycle_of(d):
        raise DigraphParseError(
            f"{args.cycle!r} is not a directed cycle of the input", 0
        )
    dec = decompose(d, cycle)
    checks = run_structure_checks(dec, strict_pseudo_paths=args.strict_remark3)
    h = dec.hasse
    hasse_desc = [
        {
            "component": cid,
            "vertices": sorted(dec.sccs.components[cid]),
            "anchored": h.anchored[cid],
            "trivial": h.trivial[cid],
            "lambda": h.lam[cid],
            "minimal": cid in h.minimal,
            "maximal": cid in h.maximal,
            "pseudominimal": cid in h.pseudominimal,
            "pseudomaximal": cid in h.pseudomaximal,
            "linear": cid in h.linear,
        }
        for cid in range(dec.sccs.k)
    ]
    if not args.json:
        print(f"D' arcs: {dec.d_prime.sorted_arcs()}")
        print(f"H arcs:  {h.digraph.sorted_arcs()}")
        for entry in hasse_desc:
            print(
                f"  component {entry['component']} {entry['vertices']}"
                + (" anchored" if entry["anchored"] else "")
                + (f" lambda={entry['lambda']}" if entry["anchored"] else "")
                + (" minimal" if entry["minimal"] else "")
                + (" maximal" if entry["maximal"] else "")
                + (" pseudominimal" if entry["pseudominimal"] else "")
                + (" pseudomaximal" if entry["pseudomaximal"] else "")
                + (" linear" if entry["linear"] else "")
            )
    extra = {
        "d_prime_arcs": dec.d_prime.sorted_arcs(),
        "hasse": {"arcs": h.digraph.sorted_arcs(), "components": hasse_desc},
    }
    return _finish(argv, checks, extra, args)


def _check_long_run(q: int, allow_long: bool) -> None:
    if q >= LONG_RUN_THRESHOLD and not allow_long:
        raise DigraphParseError(
            f"q={q} is a long-running enumeration; pass --allow-long to proceed", 0
        )


def cmd_enumerate(args, argv: Sequence[str]) -> int:
    if args.q < 2:
        raise DigraphParseError("--q must be >= 2", 0)
    _check_long_run(args.q, args.allow_long)
    if args.mode == "canonical":
        forms = canonical_forms(args.q, args.jobs, pruned=args.pruned)
        if args.count_only:
            print(len(forms))
        else:
            for comp in forms:
                print(",".join(str(v) for v in comp))
        return EXIT_OK
    stream = iter_raw_configs(args.q) if args.mode == "raw" else iter_valid_configs(args.q)
    count = 0
    for comp in stream:
        count += 1
        if not args.count_only:
            print(",".join(str(v) for v in comp))
    if args.count_only:
        print(count)
    return EXIT_OK


def cmd_table1(args, argv: Sequence[str]) -> int:
    if not (2 <= args.max_q <= 19):
        raise DigraphParseError("--max-q must be between 2 and 19", 0)
    _check_long_run(args.max_q, args.allow_long)
    rows = []
    all_match = True
    for q in range(2, args.max_q + 1):
        computed = count_canonical_configs(q, args.jobs, pruned=args.pruned)
        reference = REFERENCE_COUNTS[q]
        match = computed == reference
        all_match &= match
        rows.append(
            {
                "q": q,
                "computed": computed,
                "reference": reference,
                "match": match,
            }
        )
    if args.json:
        doc = _document(argv, [], {"rows": rows, "all_match": all_match})
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"{'q':>3} {'computed':>10} {'reference':>10}  result")
        for row in rows:
            verdict = "MATCH" if row["match"] else "MISMATCH"
            print(
                f"{row['q']:>3} {row['computed']:>10} {row['reference']:>10}  {verdict}"
            )
    return EXIT_OK if all_match else EXIT_CHECK_FAILED


def cmd_random(args, argv: Sequence[str]) -> int:
    if args.n < 2:
        raise DigraphParseError("--n must be >= 2", 0)
    d = random_msd(args.n, args.extra_arcs, args.seed)
    comments = (
        f"random MSD n={args.n} extra_arcs={args.extra_arcs} seed={args.seed}",
    )
    text = format_digraph(d, comments)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    if not args.check:
        return EXIT_OK
    checks = [check_msd_invariants(d)]
    if d.n <= 12:
        for cycle in enumerate_cycles(d).cycles:
            checks.extend(run_structure_checks(decompose(d, cycle)))
    return _finish(argv, checks, {"n": d.n, "m": d.m}, args)


def cmd_realize(args, argv: Sequence[str]) -> int:
    try:
        config = Config.parse(args.config)
    except InvalidConfigError as exc:
        raise DigraphParseError(f"invalid configuration: {exc}", 0)
    if config.q != args.q:
        raise DigraphParseError(
            f"configuration has length {config.q}, but --q is {args.q}", 0
        )
    if not is_valid_config(config):
        raise DigraphParseError(
            f"configuration {config} is not realizable (a cycle arc is forced"
            " to be transitive)", 0
        )
    try:
        d, cycle = realize_config(config)
    except RealizationError as exc:
        print(f"realization verification failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    comments = (
        f"realization of configuration {config}",
        f"cycle: {','.join(str(v) for v in cycle.vertices)}",
    )
    text = format_digraph(d, comments)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msdcycles",
        description="Cycle-structure analysis of minimal strong digraphs.",
    )
    parser.add_argument("--version", action="version", version=f"msdcycles {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check that a digraph file is an MSD")
    p.add_argument("--input", required=True, help="digraph file")
    p.add_argument("--json", action="store_true", help="print the machine-readable report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="decompose an MSD along a cycle and run all checks")
    p.add_argument("--input", required=True, help="digraph file")
    p.add_argument("--cycle", required=True, help="comma-separated cycle vertices")
    p.add_argument(
        "--strict-remark3",
        action="store_true",
        dest="strict_remark3",
        help="also require linear vertices on pseudominimal-to-pseudomaximal paths",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="stream or count configurations")
    p.add_argument("--q", type=int, required=True, help="cycle length")
    p.add_argument("--mode", choices=("raw", "valid", "canonical"), default="canonical")
    p.add_argument("--count-only", action="store_true", dest="count_only")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pruned", action="store_true", help="use the pruned generator")
    p.add_argument("--allow-long", action="store_true", dest="allow_long")
    p.set_defaults(func=cmd_enumerate, json=False)

    p = sub.add_parser("table1", help="compare computed counts with the reference table")
    p.add_argument("--max-q", type=int, required=True, dest="max_q")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--pruned", action="store_true")
    p.add_argument("--allow-long", action="store_true", dest="allow_long")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("random", help="generate a random MSD")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--extra-arcs", type=int, default=0, dest="extra_arcs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", help="write the digraph file here (default stdout)")
    p.add_argument("--check", action="store_true", help="run the full checker suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("realize", help="build the MSD realizing a configuration")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--config", required=True, help="comma-separated component array")
    p.add_argument("--output", help="write the digraph file here (default stdout)")
    p.set_defaults(func=cmd_realize, json=False)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, argv)
    except DigraphParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
