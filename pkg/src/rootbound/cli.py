"""Command-line driver: ``rootbound {eval,verify,sweep,extremal,ovals}``.

Exit codes: 0 success, 2 unreadable input, 3 degree not supported,
4 a bound fell below the oracle's mu (or ``--strict`` limit exceeded),
5 oracle did not converge, 6 ``--t auto`` with tau = 0.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .bounds import METHODS, full_report, ratio
from .exceptions import (ConfigurationError, DegreeError, DomainError,
                         InvalidPolynomialError, RootBoundError)
from .harness import (SOUNDNESS_SLACK, THEOREM_CONSTANT, ExtremalRow, SweepRow,
                      extremal_table, run_sweep, rows_to_csv, summarize)
from .localization import build_companion, oval_max_modulus, oval_union_contains, ovals_at
from .oracle import find_roots, viete_check
from .polynomial import (DEFAULT_DISTRIBUTIONS, DISTRIBUTIONS, Polynomial, make_monic,
                         parse_coefficient_text, polynomial_from_json)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGREE = 3
EXIT_UNSOUND = 4
EXIT_NONCONVERGED = 5
EXIT_TAU_ZERO = 6


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _fmt(x) -> str:
    return f"{x:.10g}"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:+.12g} {z.imag:+.12g}i"


def load_polynomial(args) -> Polynomial:
    try:
        if args.coeffs is not None:
            return parse_coefficient_text(args.coeffs)
        if args.input is None:
            raise CLIError("provide --input PATH or --coeffs \"a0 a1 ... an\"", EXIT_PARSE)
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        if text.lstrip()[:1] in ("{", "["):
            return polynomial_from_json(text)
        return parse_coefficient_text(text)
    except OSError as exc:
        raise CLIError(f"cannot read input: {exc}", EXIT_PARSE) from None
    except InvalidPolynomialError as exc:
        raise CLIError(f"invalid polynomial: {exc}", EXIT_PARSE) from None


def _parse_methods(raw: str) -> list[str]:
    if raw in ("all", ""):
        return list(METHODS)
    names = [m.strip() for m in raw.split(",") if m.strip()]
    names = ["cauchy" if m == "rho" else m for m in names]
    bad = [m for m in names if m not in METHODS]
    if bad:
        raise CLIError(f"unknown method(s) {', '.join(bad)}; choose from {', '.join(METHODS)}",
                       EXIT_PARSE)
    return names


def _parse_degrees(raw: str) -> range:
    try:
        if ":" in raw:
            lo, hi = (int(x) for x in raw.split(":", 1))
        else:
            lo = hi = int(raw)
    except ValueError:
        raise CLIError(f"--degrees expects A:B, got {raw!r}", EXIT_PARSE) from None
    if lo > hi:
        raise CLIError(f"empty degree range {raw!r}", EXIT_PARSE)
    return range(lo, hi + 1)


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# subcommands

def cmd_eval(args) -> int:
    p = load_polynomial(args)
    methods = _parse_methods(args.methods)
    report = full_report(p)
    print(f"degree    {report.degree}")
    for m in methods:
        value = report.get(m)
        print(f"{m:<9} {'n/a (degree < 3)' if value is None else _fmt(value)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    p = make_monic(load_polynomial(args))
    n = p.degree
    report = full_report(p)
    roots = find_roots(p)
    mu = roots.max_modulus
    print(f"degree    {n}")
    print("roots")
    for z in roots.roots:
        print(f"  {_fmt_complex(complex(z))}")
    print(f"mu        {_fmt(mu)}   (converged={roots.converged}, iterations={roots.iterations})")
    floor = mu - SOUNDNESS_SLACK * (1.0 + mu)
    unsound = []
    print(f"{'bound':<9} {'value':>16} {'B/mu':>14} {'B/(n*mu)':>14}")
    for m in METHODS:
        value = report.get(m)
        if value is None:
            print(f"{m:<9} {'n/a (degree < 3)':>16}")
            continue
        if m != "tau" and value < floor:
            unsound.append(m)
        if m == "tau":
            print(f"{m:<9} {_fmt(value):>16}")
            continue
        r1, r2 = ratio(value, mu), ratio(value, n * mu)
        if r1 is None:
            print(f"{m:<9} {_fmt(value):>16}   ratios undefined (p = z^n)")
        else:
            print(f"{m:<9} {_fmt(value):>16} {_fmt(r1):>14} {_fmt(r2):>14}")
    v = viete_check(p, roots)
    print(f"viete sum     |sum roots + a_(n-1)|      = {v.sum_error:.3e}  "
          f"(tol {v.sum_tol:.1e}) {'ok' if v.sum_ok else 'FAIL'}")
    print(f"viete product |prod roots - (-1)^n a_0|  = {v.product_error:.3e}  "
          f"(tol {v.product_tol:.1e}) {'ok' if v.product_ok else 'FAIL'}")
    if not roots.converged:
        print("oracle did not converge", file=sys.stderr)
        return EXIT_NONCONVERGED
    if unsound:
        print(f"bound(s) below mu: {', '.join(unsound)}", file=sys.stderr)
        return EXIT_UNSOUND
    return EXIT_OK


def cmd_sweep(args) -> int:
    degrees = _parse_degrees(args.degrees)
    dists = list(DEFAULT_DISTRIBUTIONS) if args.dist == "all" else [args.dist]
    rows = run_sweep(degrees, args.samples, dists, args.seed)
    text = rows_to_csv(rows, SweepRow)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    summary = summarize(rows)
    stream = sys.stderr if not args.out else sys.stdout
    for line in summary.lines():
        print(line, file=stream)
    if not args.out:
        sys.stdout.write(text)
    if args.strict and not summary.within_constants:
        print("strict: sweep exceeded a proven constant or found an unsound bound",
              file=sys.stderr)
        return EXIT_UNSOUND
    return EXIT_OK


def cmd_extremal(args) -> int:
    rows = extremal_table(args.n_max)
    _emit(rows_to_csv(rows, ExtremalRow), args.out)
    worst = max((r.ratio_gamma_mu / r.n for r in rows), default=None)
    if args.out and worst is not None:
        print(f"rows {len(rows)}; max gamma/(n*mu) = {worst:.6f} (limit {THEOREM_CONSTANT})")
    if args.strict and worst is not None and worst > THEOREM_CONSTANT:
        return EXIT_UNSOUND
    return EXIT_OK


def cmd_ovals(args) -> int:
    p = make_monic(load_polynomial(args))
    n = p.degree
    if n < 2:
        raise CLIError(f"ovals require degree >= 2, got {n}", EXIT_DEGREE)
    report = full_report(p)
    if args.t == "auto":
        if report.tau is None:
            raise CLIError("--t auto needs degree >= 3 to define tau", EXIT_DEGREE)
        if report.tau == 0:
            raise CLIError("tau = 0: the polynomial is z^(n-2) times a quadratic, so the "
                           "scaling is degenerate; pass an explicit --t", EXIT_TAU_ZERO)
        t = report.tau
    else:
        try:
            t = float(args.t)
        except ValueError:
            raise CLIError(f"--t expects 'auto' or a positive number, got {args.t!r}",
                           EXIT_PARSE) from None
    try:
        ovals = ovals_at(p, t)
    except DomainError as exc:
        raise CLIError(str(exc), EXIT_PARSE) from None
    roots = find_roots(p)
    inside = oval_union_contains(build_companion(p, t), roots.roots)
    payload = {
        "degree": n,
        "t": t,
        "ovals": [
            {
                "i": o.i,
                "j": o.j,
                "center_i": [o.center_i.real, o.center_i.imag],
                "center_j": [o.center_j.real, o.center_j.imag],
                "radius_product": o.radius_product,
                "max_modulus": oval_max_modulus(o),
            }
            for o in ovals
        ],
        "circumradius": max(oval_max_modulus(o) for o in ovals),
        "gamma": report.gamma,
        "roots": [[float(z.real), float(z.imag)] for z in roots.roots],
        "root_contained": [bool(x) for x in inside],
        "all_roots_contained": bool(np.all(inside)),
        "oracle_converged": roots.converged,
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return EXIT_OK


# --------------------------------------------------------------------------

def _add_input(sp):
    sp.add_argument("--input", help="polynomial file (JSON or whitespace-separated reals); '-' for stdin")
    sp.add_argument("--coeffs", help='inline coefficients "a0 a1 ... an", ascending degree')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootbound",
        description="A priori bounds for the largest root modulus of a polynomial.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("eval", help="print root-modulus bounds")
    _add_input(sp)
    sp.add_argument("--methods", default="all",
                    help=f"comma-separated subset of {','.join(METHODS)} (default all)")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="compare every bound with the oracle's roots")
    _add_input(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="random-coefficient sweep written as CSV")
    sp.add_argument("--degrees", default="3:30", help="inclusive degree range A:B (default 3:30)")
    sp.add_argument("--samples", type=int, default=500, help="samples per degree (default 500)")
    sp.add_argument("--dist", default="all", choices=("all",) + DISTRIBUTIONS,
                    help="coefficient distribution (default: all four standard ones)")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--out", help="CSV path (default stdout)")
    sp.add_argument("--strict", action="store_true",
                    help="exit 4 if a bound is unsound or a ratio exceeds its proven limit")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("extremal", help="table for (z-1)^n, n = 3..N")
    sp.add_argument("--n-max", type=int, default=100)
    sp.add_argument("--out", help="CSV path (default stdout)")
    sp.add_argument("--strict", action="store_true")
    sp.set_defaults(func=cmd_extremal)

    sp = sub.add_parser("ovals", help="Cassini ovals of the scaled companion matrix as JSON")
    _add_input(sp)
    sp.add_argument("--t", default="auto", help="scaling parameter, or 'auto' for tau")
    sp.add_argument("--out", help="JSON path (default stdout)")
    sp.set_defaults(func=cmd_ovals)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"rootbound: {exc}", file=sys.stderr)
        return exc.code
    except DegreeError as exc:
        print(f"rootbound: {exc}", file=sys.stderr)
        return EXIT_DEGREE
    except (ConfigurationError, DomainError, InvalidPolynomialError) as exc:
        print(f"rootbound: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RootBoundError as exc:
        print(f"rootbound: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
