"""Command-line front end: compute tables, run verification suites, export
machine-readable results.

Output conventions (also documented in the README):

- JSON output is newline-delimited, one object per row, keys sorted.
- Every potentially large integer is serialized as a decimal string so
  consumers that parse JSON numbers as doubles cannot lose precision.
- Quadratic integers a + b*phi serialize as {"a": ..., "b": ...};
  Gaussian integers as {"re": ..., "im": ...}.
- CSV uses raw decimal digits, comma separators, and "\n" line endings.
- Exit codes: 0 success, 1 verification/consistency failure, 2 usage error.

Diagnostics go to standard error and are controlled by the environment
variable FIBIDEAL_LOG (debug, info, or quiet); results go to standard
output only.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from .core import (
    ConsistencyError,
    cn_poly,
    lambda_divisor,
    lambda_eval,
    lambda_product,
)
from .rings import ALPHA, IMAG, NotInvertibleError
from .series import lambda_product_series, symbolic_cn_product_series
from .verify import DEFAULT_GF_MAX, SUITES, run_suites

log = logging.getLogger(__name__)

_LOG_LEVELS = {"debug": logging.DEBUG, "info": logging.INFO,
               "quiet": logging.CRITICAL + 10}

_EVAL_POINTS = ("alpha", "minus_one", "i")

_LAMBDA_METHODS = ("product", "divisor", "eval", "all")


def _configure_logging() -> None:
    wanted = os.environ.get("FIBIDEAL_LOG", "").strip().lower()
    level = _LOG_LEVELS.get(wanted, logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _json_row(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(lines: list[str], out: str | None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        log.info("wrote %d lines to %s", len(lines), out)


def _poly_pairs(poly) -> list[list[object]]:
    """Laurent polynomial as [exponent, decimal-string] pairs, ascending."""
    return [[e, str(poly.coefficient(e))] for e in sorted(poly.support())]


def cmd_lambda(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    methods = _LAMBDA_METHODS[:3] if args.method == "all" else (args.method,)
    table: dict[str, list[int]] = {}
    if "product" in methods:
        table["product"] = [r.value for r in lambda_product(args.max)]
    if "divisor" in methods:
        table["divisor"] = [lambda_divisor(n).value
                            for n in range(1, args.max + 1)]
    if "eval" in methods:
        table["eval"] = [lambda_eval(n).value for n in range(1, args.max + 1)]
    log.info("lambda table up to n=%d in %.2fs",
             args.max, time.perf_counter() - start)

    lines = []
    if args.format == "csv":
        if args.method == "all":
            lines.append("n,lambda_product,lambda_divisor,lambda_eval")
        else:
            lines.append("n,lambda")
        for i in range(args.max):
            values = [str(table[m][i]) for m in methods]
            lines.append(f"{i + 1}," + ",".join(values))
    else:
        for i in range(args.max):
            if args.method == "all":
                row: dict[str, object] = {
                    "n": i + 1,
                    "lambda_product": str(table["product"][i]),
                    "lambda_divisor": str(table["divisor"][i]),
                    "lambda_eval": str(table["eval"][i]),
                }
            else:
                row = {"n": i + 1, "lambda": str(table[args.method][i])}
            lines.append(_json_row(row))
    _emit(lines, args.out)

    if args.method == "all":
        bad = [i + 1 for i in range(args.max)
               if not (table["product"][i] == table["divisor"][i]
                       == table["eval"][i])]
        if bad:
            print(f"lambda method mismatch at n = {bad}", file=sys.stderr)
            return 1
    return 0


def cmd_cn(args: argparse.Namespace) -> int:
    n = args.n
    poly = cn_poly(n).poly
    coeffs = [str(poly.coefficient(e)) for e in range(2 * n + 1)]

    evaluations: dict[str, object] = {}
    flat: list[tuple[str, object]] = []
    if "alpha" in args.eval:
        v = poly.eval_at(ALPHA)
        evaluations["alpha"] = {"a": str(v.a), "b": str(v.b)}
        flat += [("eval_alpha_a", v.a), ("eval_alpha_b", v.b)]
    if "minus_one" in args.eval:
        v = poly.eval_at(-1)
        evaluations["minus_one"] = str(v)
        flat.append(("eval_minus_one", v))
    if "i" in args.eval:
        v = poly.eval_at(IMAG)
        evaluations["i"] = {"re": str(v.re), "im": str(v.im)}
        flat += [("eval_i_re", v.re), ("eval_i_im", v.im)]

    if args.format == "csv":
        lines = ["field,value", f"n,{n}"]
        lines += [f"coeff_{e},{c}" for e, c in enumerate(coeffs)]
        lines += [f"{key},{value}" for key, value in flat]
    else:
        row: dict[str, object] = {"n": n, "cn_coeffs": coeffs}
        if evaluations:
            row["evaluations"] = evaluations
        lines = [_json_row(row)]
    _emit(lines, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    reports = run_suites(args.suites, args.max, gf_max=args.gf_max,
                         jobs=args.jobs)
    log.info("verification took %.2fs", time.perf_counter() - start)

    for report in reports:
        print(report.summary_line())
    failed = False
    for report in reports:
        for check in report.failures:
            failed = True
            print(f"  FAIL {check.identity} n={check.n}: "
                  f"left={check.left} right={check.right}")
    if args.out:
        _emit([_json_row(report.to_dict()) for report in reports], args.out)
    return 1 if failed else 0


def cmd_series(args: argparse.Namespace) -> int:
    lines = []
    if args.kind == "lambda":
        series = lambda_product_series(args.max)
        if args.format == "csv":
            lines.append("n,coeff")
            lines += [f"{k},{c}" for k, c in enumerate(series.coeffs)]
        else:
            lines += [_json_row({"n": k, "coeff": str(c)})
                      for k, c in enumerate(series.coeffs)]
    else:
        series = symbolic_cn_product_series(args.max)
        if args.format == "csv":
            lines.append("n,coeff")
            lines += [f"{k},{c}" for k, c in enumerate(series.coeffs)]
        else:
            lines += [_json_row({"n": k, "coeff": _poly_pairs(c)})
                      for k, c in enumerate(series.coeffs)]
    _emit(lines, args.out)
    return 0


def _parse_csv_choices(parser: argparse.ArgumentParser, text: str,
                       allowed: tuple[str, ...], what: str) -> list[str]:
    picked = [item.strip() for item in text.split(",") if item.strip()]
    bad = [item for item in picked if item not in allowed]
    if bad:
        parser.error(f"unknown {what}: {', '.join(bad)} "
                     f"(choose from {', '.join(allowed)})")
    # Canonical order, duplicates dropped, so output is deterministic.
    return [item for item in allowed if item in picked]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibideal",
        description="Exact computation and verification of the "
                    "ideal-counting polynomials C_n(q) and the integer "
                    "sequence lambda_n.",
        epilog="Serialization: big integers are decimal strings; a + b*phi "
               "is {a, b}; Gaussian re + im*i is {re, im}. Set "
               "FIBIDEAL_LOG=debug|info|quiet for diagnostics on stderr.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       help="output format (default: json, "
                            "newline-delimited objects)")
        p.add_argument("--out", metavar="FILE", default=None,
                       help="write results to FILE instead of stdout")

    p_lambda = sub.add_parser(
        "lambda", help="tabulate lambda_n for n = 1..MAX")
    p_lambda.add_argument("--max", type=_positive_int, required=True,
                          metavar="N", help="largest n to tabulate")
    p_lambda.add_argument("--method", choices=_LAMBDA_METHODS,
                          default="divisor",
                          help="which computation to use; 'all' runs all "
                               "three and fails on any disagreement "
                               "(default: divisor)")
    add_common(p_lambda)
    p_lambda.set_defaults(handler=cmd_lambda)

    p_cn = sub.add_parser(
        "cn", help="print the coefficients of C_n, optionally with exact "
                   "evaluations")
    p_cn.add_argument("--n", type=_positive_int, required=True,
                      help="index of the polynomial")
    p_cn.add_argument("--eval", metavar="POINTS", default="",
                      help="comma-separated subset of: alpha, minus_one, i")
    add_common(p_cn)
    p_cn.set_defaults(handler=cmd_cn)

    p_verify = sub.add_parser(
        "verify", help="run identity-verification suites")
    p_verify.add_argument("--max", type=_positive_int, required=True,
                          metavar="N", help="verify each suite for n = 1..N")
    p_verify.add_argument("--suites", metavar="NAMES",
                          default=",".join(SUITES),
                          help="comma-separated subset of: "
                               + ", ".join(SUITES)
                               + " (default: all)")
    p_verify.add_argument("--gf-max", type=_positive_int,
                          default=DEFAULT_GF_MAX, metavar="N",
                          help="series order for the gf suite "
                               f"(default: {DEFAULT_GF_MAX})")
    p_verify.add_argument("--jobs", type=int, default=0, metavar="K",
                          help="worker processes; 0 means all cores "
                               "(default: 0)")
    p_verify.add_argument("--out", metavar="FILE", default=None,
                          help="also write one JSON report per suite to FILE")
    p_verify.set_defaults(handler=cmd_verify)

    p_series = sub.add_parser(
        "series", help="dump generating-series coefficients for inspection")
    p_series.add_argument("--kind", choices=("lambda", "gf"),
                          required=True,
                          help="lambda: integer series prod (1 + F(t^m)); "
                               "gf: symbolic series in q")
    p_series.add_argument("--max", type=_positive_int, required=True,
                          metavar="N", help="truncation order")
    add_common(p_series)
    p_series.set_defaults(handler=cmd_series)
    return parser


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "cn":
        args.eval = _parse_csv_choices(parser, args.eval, _EVAL_POINTS,
                                       "evaluation point")
    elif args.command == "verify":
        args.suites = _parse_csv_choices(parser, args.suites, SUITES,
                                         "suite")
        if not args.suites:
            parser.error("no suites selected")
    try:
        return args.handler(args)
    except (ConsistencyError, NotInvertibleError) as exc:
        print(f"fibideal: consistency failure: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # exit codes are contractually 0, 1, or 2
        log.debug("unexpected failure", exc_info=True)
        print(f"fibideal: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
