"""Command-line front end: expand / derive / verify / eval / converge."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .errors import SliceError
from .expansion import (SphericalExpansion, derivative_coefficients,
                        spherical_coefficients)
from .numeric import (CassiniBall, convergence_csv, convergence_report,
                      fit_coefficients_oracle, oracle_sample_points)
from .parser import contains_exp, lower_numeric, lower_symbolic, parse_expression
from .quaternion import Quaternion
from .suites import SUITES, run_suite


def _render(q: Quaternion, as_float: bool) -> str:
    return str(q.to_float() if as_float else q)


def _parse_quaternion(text: str) -> Quaternion:
    return Quaternion.parse(text)


def _emit_error(exc: Exception) -> int:
    payload = {"error": getattr(exc, "code", type(exc).__name__),
               "message": str(exc)}
    offset = getattr(exc, "offset", None)
    if offset is not None:
        payload["offset"] = offset
    print(json.dumps(payload), file=sys.stderr)
    return 1


def cmd_expand(args) -> int:
    expr = parse_expression(args.f)
    q0 = _parse_quaternion(args.q0)
    if contains_exp(expr):
        raise SliceError("expand needs an exact expression; exp() is numeric-only")
    f = lower_symbolic(expr)
    e = spherical_coefficients(f, q0, args.n)
    if args.json:
        print(json.dumps(e.to_json()))
    else:
        for n, s in enumerate(e.coeffs):
            print(f"s_{n} = {_render(s, args.float)}")
    return 0


def cmd_derive(args) -> int:
    expr = parse_expression(args.f)
    q0 = _parse_quaternion(args.q0)
    f = lower_symbolic(expr)
    # route 1: coefficient recurrence from the coefficients of f
    via_relation = derivative_coefficients(
        spherical_coefficients(f, q0, args.n + 2))
    # route 2: direct extraction from the slice derivative
    direct = spherical_coefficients(f.slice_derivative(), q0, args.n)
    print(f"{'n':>3}  {'via recurrence':<40}  {'direct':<40}  difference")
    for n in range(args.n + 1):
        a, b = via_relation.coeffs[n], direct.coeffs[n]
        print(f"{n:>3}  {_render(a, args.float):<40}  "
              f"{_render(b, args.float):<40}  {_render(a - b, args.float)}")
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, kmax=args.kmax)
    failures = 0
    for r in results:
        if not r.passed:
            failures += 1
        if not r.passed or args.verbose:
            print(r.line())
    print(f"suite {args.suite}: {len(results) - failures}/{len(results)} checks passed")
    return 0 if failures == 0 else 1


def cmd_eval(args) -> int:
    expr = parse_expression(args.f)
    x = _parse_quaternion(args.x)
    if contains_exp(expr):
        value = lower_numeric(expr).evaluate(x)
    else:
        value = lower_symbolic(expr).evaluate(x)
    print(_render(value, args.float))
    return 0


def cmd_converge(args) -> int:
    expr = parse_expression(args.f)
    q0 = _parse_quaternion(args.q0)
    ball = CassiniBall(q0, args.radius)
    if contains_exp(expr):
        nf = lower_numeric(expr)
        evaluator = nf.evaluate
        samples = oracle_sample_points(q0, 4 * (args.n + 1),
                                       circle_radius=min(0.25, args.radius / 2))
        coeffs, _ = fit_coefficients_oracle(evaluator, q0, args.n, samples)
        e = SphericalExpansion(q0, coeffs)
    else:
        f = lower_symbolic(expr)
        evaluator = f.evaluate
        e = spherical_coefficients(f, q0, args.n)
    rows, max_err, mean_err = convergence_report(evaluator, e, ball,
                                                 grid=args.grid)
    sys.stdout.write(convergence_csv(rows))
    print(f"# max_error={max_err!r} mean_error={mean_err!r}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="slicereg",
        description="Spherical expansions of quaternionic slice-regular "
                    "functions: exact coefficient extraction and verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p, with_float=True):
        if with_float:
            p.add_argument("--float", action="store_true",
                           help="render values as decimals instead of exact rationals")

    p = sub.add_parser("expand", help="spherical coefficients s_0..s_N at q0")
    p.add_argument("--f", required=True, help="expression in x")
    p.add_argument("--q0", required=True, help="non-real base point")
    p.add_argument("--n", required=True, type=int, help="truncation index N")
    p.add_argument("--json", action="store_true")
    add_common(p)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("derive",
                       help="coefficients of the slice derivative two ways")
    p.add_argument("--f", required=True)
    p.add_argument("--q0", required=True)
    p.add_argument("--n", required=True, type=int)
    add_common(p)
    p.set_defaults(fn=cmd_derive)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--verbose", action="store_true",
                   help="print passing checks too")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("eval", help="evaluate an expression at a point")
    p.add_argument("--f", required=True)
    p.add_argument("--x", required=True)
    add_common(p)
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("converge", help="truncation-error CSV over a Cassini ball")
    p.add_argument("--f", required=True)
    p.add_argument("--q0", required=True)
    p.add_argument("--radius", required=True, type=float)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--grid", type=int, default=8)
    p.set_defaults(fn=cmd_converge)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (SliceError, ValueError, ZeroDivisionError) as exc:
        return _emit_error(exc)


if __name__ == "__main__":
    sys.exit(main())
