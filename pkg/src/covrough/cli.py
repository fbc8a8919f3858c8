"""Command-line front end.

Subcommands::

    covrough cov FILE                    neighborhoods of a covering
    covrough analyze FILE [--lambda] [--json]
    covrough reduce FILE                 remove reducible blocks
    covrough check-neighborhoods FILE    is this family a neighborhoods?
    covrough preimages FILE [--limit N]  coverings inducing this family
    covrough verify --n K [--json]       exhaustive law verification

Coverings are read from JSON files ({"universe": [...], "blocks": [[...]]}).
Results go to stdout, errors to stderr.  Exit codes: 0 success, 1 bad input
or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CoveringError
from .neighborhoods import cov, is_cov_fixed_point, quick_reject_neighborhoods
from .oracle import preimages, summary_to_dict, verify_laws
from .reduction import reduct
from .report import analyze, render_report, report_to_dict
from .setsys import covering_to_json, read_covering


def _cmd_cov(args: argparse.Namespace) -> int:
    print(covering_to_json(cov(read_covering(args.file))))
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(read_covering(args.file), include_lambda=args.lambda_matrix)
    if args.json:
        print(json.dumps(report_to_dict(report), indent=2))
    else:
        print(render_report(report), end="")
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    print(covering_to_json(reduct(read_covering(args.file))))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    c = read_covering(args.file)
    reason = quick_reject_neighborhoods(c)
    if reason is not None:
        print(f"is NOT a neighborhoods: {reason.value}")
    elif is_cov_fixed_point(c):
        print("IS a neighborhoods: Cov(D) = D")
    else:
        print("is NOT a neighborhoods: Cov(D) differs from D")
    return 0


def _cmd_preimages(args: argparse.Namespace) -> int:
    for p in preimages(read_covering(args.file), limit=args.limit):
        print(covering_to_json(p))
    return 0


def _render_summary(summary) -> str:
    lines = [
        f"universe size:      {summary.universe_size}",
        f"coverings checked:  {summary.total_coverings}",
        f"partitions:         {summary.partitions}",
        f"irreducible:        {summary.irreducible}",
        f"invariable:         {summary.invariable}",
        f"Cov fixed points:   {summary.fixed_points}",
        f"violations:         {len(summary.violations)}",
    ]
    for covering, law in summary.violations:
        lines.append(f"  {law}: {covering}")
    return "\n".join(lines)


def _cmd_verify(args: argparse.Namespace) -> int:
    summary = verify_laws(args.n, allow_large=args.allow_large)
    if args.json:
        print(json.dumps(summary_to_dict(summary)))
    else:
        print(_render_summary(summary))
    return 0 if not summary.violations else 1


def _add_file_argument(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("file", help="covering file (JSON)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covrough",
        description="Analyze coverings of finite universes: neighborhoods, "
        "repeat degrees, core blocks, reduction, invariability.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("cov", help="print the neighborhoods of a covering")
    _add_file_argument(sub)
    sub.set_defaults(func=_cmd_cov)

    sub = subs.add_parser("analyze", help="full per-element and per-block report")
    _add_file_argument(sub)
    sub.add_argument(
        "--lambda",
        dest="lambda_matrix",
        action="store_true",
        help="include the pair repeat-degree matrix",
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.set_defaults(func=_cmd_analyze)

    sub = subs.add_parser("reduce", help="remove reducible blocks")
    _add_file_argument(sub)
    sub.set_defaults(func=_cmd_reduce)

    sub = subs.add_parser(
        "check-neighborhoods",
        help="decide whether the family is the neighborhoods of some covering",
    )
    _add_file_argument(sub)
    sub.set_defaults(func=_cmd_check)

    sub = subs.add_parser(
        "preimages", help="enumerate the coverings whose neighborhoods equal this family"
    )
    _add_file_argument(sub)
    sub.add_argument("--limit", type=int, default=None, help="stop after N results")
    sub.set_defaults(func=_cmd_preimages)

    sub = subs.add_parser(
        "verify", help="exhaustively verify all structural laws for universe size N"
    )
    sub.add_argument("--n", type=int, required=True, help="universe size (1..4)")
    sub.add_argument(
        "--allow-large",
        action="store_true",
        help="permit n=5 (enumeration of ~2^31 families; very long run)",
    )
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str]) -> int:
    """Dispatch one command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return 1
    except IsADirectoryError as exc:
        print(f"error: not a file: {exc.filename}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return 1
    except CoveringError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
