"""Command-line front end.

Subcommands: ``analyze`` (all warping quantities of one diagram),
``oracle`` (brute-force cross-check of the warping degree), ``generate``
(family diagrams), ``batch`` (analyze a file of codes), ``verify`` (the
theorem suite over the bundled table) and ``convert`` (notation
transcoding).

Exit codes: 0 success, 1 failed checks (verify failures, oracle
disagreement, failed batch lines), 2 usage or input errors.  With
``--output records`` every result is one JSON line with sorted keys, so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import families
from .codes import (
    GaussCode,
    detect_notation,
    dt_to_gauss,
    gauss_to_dt,
    parse_dt,
    parse_gauss,
    parse_pd,
    pd_to_gauss,
    serialize,
)
from .diagram import OrientedDiagram, from_gauss, to_gauss
from .errors import WarpingError
from .oracle import ORACLE_CAP, min_changes_to_monotone, random_codes
from .table import load_table, verify_paper
from .warping import profile, summary

__all__ = ["main"]

_ENV_TABLE = "WARPDEG_TABLE"


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _record(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_input(value: str) -> str:
    """The argument itself, or the contents of the file it names."""
    path = Path(value)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    return value


def _parse_code(text: str, notation: str) -> GaussCode:
    kind = detect_notation(text) if notation == "auto" else notation
    if kind == "gauss":
        return parse_gauss(text)
    if kind == "dt":
        return dt_to_gauss(parse_dt(text))
    if kind == "pd":
        return pd_to_gauss(parse_pd(text))
    raise ValueError(f"unknown notation {kind!r}")


def _summary_line(s) -> str:
    return (
        f"d(D)={s.d_forward} d(-D)={s.d_reverse} "
        f"e={s.warping_sum} spn={s.span}"
    )


def _poly_text(coeffs: tuple[int, ...]) -> str:
    terms = [f"{c}*t^{k}" for k, c in enumerate(coeffs) if c]
    return " + ".join(terms) if terms else "0"


def _analysis_record(diagram: OrientedDiagram) -> dict:
    s = summary(diagram)
    return {
        "canonical": serialize(to_gauss(diagram)),
        "crossings": s.crossings,
        "d": s.d_forward,
        "d_rev": s.d_reverse,
        "e": s.warping_sum,
        "spn": s.span,
        "monotone": s.d_forward == 0,
        "profile": list(profile(diagram).degrees),
        "polynomial": list(s.polynomial),
    }


def _print_analysis(diagram: OrientedDiagram, args) -> None:
    if args.output == "records":
        _emit(_record(_analysis_record(diagram)))
        return
    s = summary(diagram)
    if not args.quiet:
        _emit(f"crossings: {s.crossings}")
    _emit(_summary_line(s))
    if not args.quiet:
        _emit("profile: " + " ".join(str(x) for x in profile(diagram).degrees))
        _emit("polynomial: " + _poly_text(s.polynomial))
        _emit(f"monotone: {'yes' if s.d_forward == 0 else 'no'}")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_analyze(args) -> int:
    diagram = from_gauss(_parse_code(_read_input(args.code), args.format))
    _print_analysis(diagram, args)
    return 0


def _cmd_oracle(args) -> int:
    cap = args.oracle_cap if args.oracle_cap is not None else ORACLE_CAP
    if args.random is not None:
        return _oracle_random(args, cap)
    diagram = from_gauss(_parse_code(_read_input(args.code), args.format))
    result = min_changes_to_monotone(diagram, budget=args.budget, cap=cap)
    degree = profile(diagram).minimum
    agree = result.changes == degree
    if args.output == "records":
        _emit(_record({
            "oracle": result.changes,
            "witness": list(result.witness),
            "nodes_searched": result.nodes_searched,
            "engine": degree,
            "agree": agree,
        }))
    else:
        if not args.quiet:
            _emit(
                f"oracle: min_changes={result.changes} "
                f"witness={list(result.witness)} "
                f"searched={result.nodes_searched}"
            )
            _emit(f"engine: d(D)={degree}")
        _emit(f"verdict: {'AGREE' if agree else 'DISAGREE'}")
    return 0 if agree else 1


def _oracle_random(args, cap: int) -> int:
    codes = random_codes(args.random, args.max_crossings, args.seed)
    disagreements = 0
    for index, code in enumerate(codes):
        diagram = from_gauss(code)
        result = min_changes_to_monotone(diagram, cap=cap)
        degree = profile(diagram).minimum
        agree = result.changes == degree
        disagreements += not agree
        if args.output == "records":
            _emit(_record({
                "index": index,
                "code": serialize(code),
                "oracle": result.changes,
                "engine": degree,
                "agree": agree,
            }))
        elif not agree:
            _emit(
                f"DISAGREE {serialize(code)}: "
                f"oracle={result.changes} engine={degree}"
            )
    if args.output != "records":
        _emit(
            f"verdict: {args.random} random codes, "
            + ("all agree" if not disagreements
               else f"{disagreements} disagreement(s)")
        )
    return 1 if disagreements else 0


def _cmd_generate(args) -> int:
    if args.family == "twist":
        diagram = families.twist_minimal(args.n)
    elif args.family == "rational":
        diagram = families.rational_pq(args.p, args.q)
    else:
        diagram = families.ozawa_twist(args.n)
    notation = "gauss" if args.format == "auto" else args.format
    gauss = to_gauss(diagram)
    if notation == "gauss":
        code = serialize(gauss)
    elif notation == "dt":
        code = serialize(gauss_to_dt(gauss))
    else:
        pd = families.family_pd(args.family, args)
        code = serialize(pd)
    _emit(code)
    return 0


def _cmd_batch(args) -> int:
    lines = Path(args.file).read_text(encoding="utf-8").splitlines()
    failures = 0
    for number, line in enumerate(lines, start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            diagram = from_gauss(_parse_code(body, args.format))
            if args.output == "records":
                record = _analysis_record(diagram)
                record["line"] = number
                _emit(_record(record))
            else:
                _emit(f"line {number}: {_summary_line(summary(diagram))}")
        except WarpingError as exc:
            failures += 1
            if args.output == "records":
                _emit(_record({"line": number, "error": str(exc)}))
            else:
                _emit(f"line {number}: ERROR {exc}")
    if args.output != "records" and not args.quiet:
        _emit(f"batch: {failures} failed line(s)")
    return 1 if failures else 0


def _table_path(args) -> str | None:
    if args.table is not None:
        return args.table
    return os.environ.get(_ENV_TABLE)


def _cmd_verify(args) -> int:
    report = verify_paper(load_table(_table_path(args)))
    if args.output == "records":
        for row in report.records():
            _emit(_record(row))
    elif args.quiet:
        _emit(report.render_text().splitlines()[-1])
    else:
        _emit(report.render_text())
    return 0 if report.passed else 1


def _cmd_convert(args) -> int:
    gauss = _parse_code(_read_input(args.code), args.format)
    if args.to == "gauss":
        _emit(serialize(gauss))
    elif args.to == "dt":
        _emit(serialize(gauss_to_dt(gauss)))
    else:
        raise WarpingError(
            "pd output needs planar embedding data; only the gauss and dt "
            "targets are supported"
        )
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("gauss", "dt", "pd", "auto"), default="auto",
        help="input notation (output notation for generate); default auto",
    )
    common.add_argument(
        "--output", choices=("text", "records"), default="text",
        help="text for humans, records for line-delimited JSON",
    )
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized modes")
    common.add_argument("--oracle-cap", type=int, default=None,
                        help=f"crossing cap for subset search (default {ORACLE_CAP})")
    common.add_argument("--table", default=None,
                        help=f"table file (overrides ${_ENV_TABLE})")
    common.add_argument("--quiet", action="store_true",
                        help="essential output only")

    parser = argparse.ArgumentParser(
        prog="warpdeg",
        description="Warping invariants of knot diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="warping quantities of one diagram")
    p.add_argument("code", help="diagram code or path to a file holding one")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("oracle", parents=[common],
                       help="brute-force check of the warping degree")
    p.add_argument("code", nargs="?", default=None,
                   help="diagram code or file; omit with --random")
    p.add_argument("--budget", type=int, default=None,
                   help="largest change-set size to try")
    p.add_argument("--random", type=int, default=None, metavar="COUNT",
                   help="check COUNT seeded random codes instead")
    p.add_argument("--max-crossings", type=int, default=8,
                   help="crossing bound for --random (default 8)")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("generate", parents=[common],
                       help="emit a family diagram")
    p.add_argument("family", choices=("twist", "rational", "ozawa"))
    p.add_argument("--n", type=int, default=None,
                   help="half-twist count (twist and ozawa families)")
    p.add_argument("--p", type=int, default=None, help="first twist region")
    p.add_argument("--q", type=int, default=None, help="second twist region")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("batch", parents=[common],
                       help="analyze every code in a file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("verify", parents=[common],
                       help="run the theorem suite over the knot table")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("convert", parents=[common],
                       help="transcode between notations")
    p.add_argument("code", help="diagram code or path to a file holding one")
    p.add_argument("--to", choices=("gauss", "dt", "pd"), required=True,
                   help="target notation")
    p.set_defaults(func=_cmd_convert)

    return parser


def _check_args(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "generate":
        if args.family in ("twist", "ozawa") and args.n is None:
            parser.error(f"{args.family} needs --n")
        if args.family == "rational" and (args.p is None or args.q is None):
            parser.error("rational needs --p and --q")
    if args.command == "oracle" and args.random is None and args.code is None:
        parser.error("oracle needs a code argument or --random")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _check_args(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except WarpingError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except NotImplementedError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
