"""Command-line front end: report, exhaust, random, scan.

Results go to stdout, progress to stderr, so output is pipeline-safe.
Exit codes: 0 clean, 2 usage error, 3 contract violation found (a violation
is a major finding or an artifact bug and must not look like success).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction

from ._version import __version__
from .reporting import (
    SCHEMA_VERSION,
    SetLiteralError,
    build_report,
    canonical_set_literal,
    frac_str,
    parse_set_literal,
    render_report_csv,
    render_report_json,
    render_report_text,
)
from .search import (
    GeneralRatioRecord,
    SearchSummary,
    TruncatedScan,
    exhaustive,
    higher_derivative_scan,
    random_sets,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3

__all__ = ["main", "EXIT_OK", "EXIT_USAGE", "EXIT_VIOLATION"]


# ---------------------------------------------------------------------------
# Serialization of sweep results
# ---------------------------------------------------------------------------

def _record_dict(record) -> dict | None:
    if record is None:
        return None
    if isinstance(record, GeneralRatioRecord):
        return {
            "offset": record.offset,
            "values": list(record.function_values),
            "source_second_norm": frac_str(record.source_second_norm),
            "max_second_norm": frac_str(record.max_second_norm),
            "ratio": frac_str(record.ratio),
        }
    return {
        "set": list(record.set.elements),
        "chi_second_norm": frac_str(record.chi_second_norm),
        "max_second_norm": frac_str(record.max_second_norm),
        "ratio": frac_str(record.ratio),
    }


def _stat_value(key: str, value):
    if key == "max_by_span":
        return {str(span): _record_dict(rec) for span, rec in value.items()}
    if isinstance(value, Fraction):
        return frac_str(value)
    return value


def summary_to_dict(summary: SearchSummary) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "instances_checked": summary.instances_checked,
        "max_record": _record_dict(summary.max_record),
        "violations": [asdict(v) for v in summary.violations],
        "parameters": summary.parameters,
        "stats": {key: _stat_value(key, value)
                  for key, value in summary.stats.items()},
    }


def summary_text(summary: SearchSummary) -> str:
    lines = [f"instances checked  {summary.instances_checked}"]
    record = summary.max_record
    if record is None:
        lines.append("max record         none (no instances)")
    elif isinstance(record, GeneralRatioRecord):
        lines.append(f"max ratio          {frac_str(record.ratio)} "
                     f"at f={list(record.function_values)} (offset {record.offset})")
    else:
        lines.append(f"max ratio          {frac_str(record.ratio)} "
                     f"at {{{canonical_set_literal(record.set)}}}")
    by_span = summary.stats.get("max_by_span")
    if by_span and summary.parameters.get("mode") == "exhaustive":
        best = None
        for length in range(1, summary.parameters["length"] + 1):
            for span, rec in by_span.items():
                if span <= length - 1:
                    best = rec if best is None or rec.ratio > best.ratio else best
            if best is not None:
                lines.append(f"  L={length:<2d} max ratio {frac_str(best.ratio)} "
                             f"at {{{canonical_set_literal(best.set)}}}")
    for key, value in summary.stats.items():
        if key in ("max_by_span",):
            continue
        lines.append(f"{key:<18} {value}")
    if summary.violations:
        lines.append(f"VIOLATIONS         {len(summary.violations)}")
        for v in summary.violations:
            lines.append(f"  {v.kind}: {json.dumps(v.subject)} {json.dumps(v.details)}")
    else:
        lines.append("violations         none")
    lines.append(f"parameters         {json.dumps(summary.parameters)}")
    return "\n".join(lines)


def scan_to_dict(scan: TruncatedScan) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "set": list(scan.set.elements),
        "order": scan.order,
        "truncation": scan.truncation,
        "value": frac_str(scan.value),
        "remainder_bound": frac_str(scan.remainder_bound),
    }


def scan_text(scan: TruncatedScan) -> str:
    return "\n".join([
        f"set              {{{canonical_set_literal(scan.set)}}}",
        f"order            {scan.order}",
        f"truncation       {scan.truncation}",
        f"truncated value  {frac_str(scan.value)}",
        f"remainder bound  {frac_str(scan.remainder_bound)}",
        "true value lies in [value, value + remainder bound]",
    ])


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------

def _progress(stream):
    def emit(done: int, total: int) -> None:
        print(f"checked {done}/{total}", file=stream, flush=True)
    return emit


def _cmd_report(args: argparse.Namespace) -> int:
    a = parse_set_literal(args.set)
    if args.format == "csv":
        sys.stdout.write(render_report_csv(a, fast=args.fast))
        return EXIT_OK
    report = build_report(a, fast=args.fast)
    if args.format == "json":
        print(render_report_json(report))
    else:
        print(render_report_text(report, paper_accounting=args.paper_accounting))
    return EXIT_OK if report.lemma1_ok and report.ratio <= 3 else EXIT_VIOLATION


def _summary_out(summary: SearchSummary, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(summary_to_dict(summary), indent=2))
    else:
        print(summary_text(summary))
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def _cmd_exhaust(args: argparse.Namespace) -> int:
    summary = exhaustive(args.length, workers=args.workers, fast=args.fast,
                         progress=_progress(sys.stderr))
    return _summary_out(summary, args.format)


def _cmd_random(args: argparse.Namespace) -> int:
    summary = random_sets(args.trials, args.length, args.density, args.seed,
                          workers=args.workers, fast=args.fast,
                          progress=_progress(sys.stderr))
    return _summary_out(summary, args.format)


def _cmd_scan(args: argparse.Namespace) -> int:
    a = parse_set_literal(args.set)
    scan = higher_derivative_scan(a, args.order, args.truncation)
    if args.format == "json":
        print(json.dumps(scan_to_dict(scan), indent=2))
    else:
        print(scan_text(scan))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output format (csv is per-point data, report only)")
    common.add_argument("--workers", type=int, default=1, metavar="N",
                        help="worker processes for sweeps")
    common.add_argument("--fast", action="store_true",
                        help="use the optimized maximal path (with oracle spot checks in sweeps)")
    common.add_argument("--paper-accounting", action="store_true",
                        help="also show the boundary bound with each limit term bounded by 1")

    parser = argparse.ArgumentParser(
        prog="maxreg",
        description="Exact second-difference regularity checks for the discrete "
                    "noncentered Hardy-Littlewood maximal function.",
        epilog="exit codes: 0 clean, 2 usage error, 3 contract violation found",
    )
    parser.add_argument("--version", action="version", version=f"maxreg {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", parents=[common],
                       help="full decomposition report for one set")
    p.add_argument("set", help="set literal, e.g. '0,2,5-9'")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("exhaust", parents=[common],
                       help="check every translation class of subsets of [0, L)")
    p.add_argument("length", type=int)
    p.set_defaults(func=_cmd_exhaust)

    p = sub.add_parser("random", parents=[common],
                       help="check random subsets of [0, L)")
    p.add_argument("trials", type=int)
    p.add_argument("length", type=int)
    p.add_argument("density", help="inclusion probability in (0,1), e.g. 1/2")
    p.add_argument("seed", type=int)
    p.set_defaults(func=_cmd_random)

    p = sub.add_parser("scan", parents=[common],
                       help="truncated higher-order difference sum with remainder bound")
    p.add_argument("set", help="set literal")
    p.add_argument("order", type=int, help="difference order k >= 3")
    p.add_argument("truncation", type=int, help="half-width T of the scan range")
    p.set_defaults(func=_cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format == "csv" and args.command != "report":
        print("error: csv format is only available for 'report'", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except SetLiteralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
