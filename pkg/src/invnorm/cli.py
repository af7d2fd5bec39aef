"""Command-line front end: ``python -m invnorm <subcommand> ...``.

Exit status is 0 on success, 1 when a computation or verification fails and
2 for usage errors.
"""

from __future__ import annotations

import argparse
import math
import statistics
import sys
import time
from typing import Sequence, TextIO

import numpy as np

from . import approx, calculus, gauss, lambertw, nested, polys, series, verify

__all__ = ["main", "run", "fmt_float", "bench"]

METHODS = ("hybrid", "series", "reference", "g0", "g1", "g2", "g3")


def fmt_float(v: float) -> str:
    """Shortest round-trip decimal; integral values drop the trailing ``.0``."""
    v = float(v)
    if v == 0.0:
        return "0"
    r = repr(v)
    return r[:-2] if r.endswith(".0") else r


def _evaluate(p: float, method: str, deriv: int | None) -> float:
    if deriv is not None:
        return gauss.s_derivative_n(p, deriv)
    if method == "hybrid":
        return series.probit_hybrid(p)
    if method == "series":
        return series.s_series(p).value
    if method == "reference":
        return gauss.probit_reference(p).value
    return approx.approx_eval(method, p)


def _cmd_eval(args, out: TextIO) -> int:
    if args.stdin:
        values = [float(line) for line in sys.stdin if line.strip()]
    else:
        values = [args.p]
    for p in values:
        out.write(fmt_float(_evaluate(p, args.method, args.deriv)) + "\n")
    return 0


def _cmd_w(args, out: TextIO) -> int:
    r = lambertw.lambert_w0(args.x)
    lines = [f"value {fmt_float(r.value)}", f"iterations {r.iterations}", f"residual {fmt_float(r.residual)}"]
    if args.series is not None:
        lines.append(f"series {fmt_float(lambertw.lambert_w0_series(args.x, args.series))}")
    out.write("\n".join(lines) + "\n")
    return 0


def _cmd_polys(args, out: TextIO) -> int:
    n_max = args.max
    if args.route == "recurrence":
        rows = [list(p.coeffs) for p in polys.poly_sequence(n_max)]
    elif args.route == "matrix":
        rows = [polys.coeffs_via_matrices(n) for n in range(n_max + 1)]
    elif args.route == "triple":
        prefix = [polys.IntPolynomial([1])]
        while len(prefix) <= n_max:
            prefix.append(polys.poly_next_triple_sum(prefix))
        rows = [list(p.coeffs) for p in prefix]
    else:
        rows = [list(nested.pn_via_nested(n).coeffs) for n in range(n_max + 1)]
    for n, coeffs in enumerate(rows):
        out.write(f"{n}\t{','.join(str(c) for c in coeffs)}\n")
    return 0


def _cmd_coeffs(args, out: TextIO) -> int:
    if args.route == "poly":
        table = polys.series_coeff_c(args.max)
    else:
        table = polys.c_via_derivative_recurrence(args.max)
    for n, c in table.odd_items():
        out.write(f"{n}\t{c}\n")
    return 0


def _cmd_scan(args, out: TextIO) -> int:
    scan = approx.error_scan(args.points, args.min, args.max)
    approx.write_scan_csv(scan.rows, args.out)
    for k in approx.KINDS:
        out.write(
            f"max e{k[1]} {fmt_float(scan.max_error[k])} at x={fmt_float(scan.argmax[k])}"
            f" (|N(g)-x| max {fmt_float(scan.max_forward[k])})\n"
        )
    return 0


def _cmd_moments(args, out: TextIO) -> int:
    out.write("n,closed_form,quadrature,paper_formula\n")
    for n in range(args.max + 1):
        m = calculus.moment(n)
        out.write(f"{n},{fmt_float(m.closed_form)},{fmt_float(m.quadrature)},{fmt_float(m.paper_formula)}\n")
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    results = verify.run_checks()
    width = max(len(r.name) for r in results)
    for r in results:
        out.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}\n")
    failed = sum(not r.passed for r in results)
    out.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


def bench(grid_points: int, repeats: int = 5) -> dict[str, tuple[float, float]]:
    """Median wall time per evaluation and an fsum checksum for each method."""
    if grid_points < 1000:
        raise ValueError("bench needs at least 1000 grid points")
    p = (np.arange(grid_points) + 0.5) / grid_points
    funcs = {
        "hybrid": series.probit_hybrid,
        "reference": lambda q: gauss.probit_reference(q).value,
        "g2": lambda q: approx.approx_eval("g2", q),
        "g3": lambda q: approx.approx_eval("g3", q),
    }
    report = {}
    for name, f in funcs.items():
        times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            vals = f(p)
            times.append(time.perf_counter() - t0)
        report[name] = (statistics.median(times) / grid_points, math.fsum(vals))
    return report


def _cmd_bench(args, out: TextIO) -> int:
    report = bench(args.points, args.repeats)
    out.write("method,seconds_per_call,checksum\n")
    for name, (per_call, checksum) in report.items():
        out.write(f"{name},{per_call:.3e},{fmt_float(checksum)}\n")
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invnorm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate the probit function or its derivatives")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--p", type=float, help="probability in (0, 1)")
    src.add_argument("--stdin", action="store_true", help="read one probability per line")
    p.add_argument("--method", choices=METHODS, default="hybrid")
    p.add_argument("--deriv", type=int, help="n-th derivative (reference inverse)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("w", help="principal-branch Lambert W")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--series", type=int, metavar="N", help="also print the N-term series")
    p.set_defaults(func=_cmd_w)

    p = sub.add_parser("polys", help="coefficients of P_0..P_N")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--route", choices=("recurrence", "matrix", "triple", "nested"), default="recurrence")
    p.set_defaults(func=_cmd_polys)

    p = sub.add_parser("coeffs", help="odd C_n up to N")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--route", choices=("poly", "derivative"), default="poly")
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("scan", help="error scan of g0..g3, written as CSV")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("moments", help="moments of S over [0, 1] as CSV")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_moments)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time the evaluators")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--repeats", type=int, default=5)
    p.set_defaults(func=_cmd_bench)
    return parser


def run(argv: Sequence[str], out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = _parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("max", "points"):
        if isinstance(getattr(args, name, None), int) and getattr(args, name) < 0:
            parser.print_usage(sys.stderr)
            print(f"invnorm: error: --{name} must be nonnegative", file=sys.stderr)
            return 2
    try:
        return args.func(args, out)
    except (ValueError, ArithmeticError, OverflowError) as exc:
        print(f"invnorm: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
