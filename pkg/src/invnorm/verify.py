"""Self-verification suite behind ``invnorm verify``.

Each check measures a quantity, compares it with a fixed bound and reports
the measured value, so a failure says by how much the bound was missed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from typing import Callable

import numpy as np

from . import approx, calculus, gauss, lambertw, nested, polys, series

__all__ = ["Check", "CHECKS", "run_checks", "load_c_table", "load_p_table"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def load_c_table() -> dict[int, int]:
    text = resources.files("invnorm.data").joinpath("c_table.txt").read_text()
    out = {}
    for line in text.splitlines():
        n, c = line.split("\t")
        out[int(n)] = int(c)
    return out


def load_p_table() -> dict[int, list[int]]:
    text = resources.files("invnorm.data").joinpath("p_table.txt").read_text()
    out = {}
    for line in text.splitlines():
        n, cs = line.split("\t")
        out[int(n)] = [int(c) for c in cs.split(",")]
    return out


def _bound(name: str, value: float, limit: float, strict: bool = False) -> Check:
    ok = value < limit if strict else value <= limit
    op = "<" if strict else "<="
    return Check(name, bool(ok), f"{value:.3e} {op} {limit:.1e}")


def check_c_table() -> Check:
    golden = load_c_table()
    a = polys.series_coeff_c(41)
    b = polys.c_via_derivative_recurrence(41)
    bad = [n for n, c in golden.items() if a[n] != c or b[n] != c]
    evens_zero = all(a[n] == 0 and b[n] == 0 for n in range(2, 42, 2))
    return Check("C_n table (two routes, n <= 41)", not bad and evens_zero, f"mismatches at {bad}" if bad else "21/21 exact")


def check_p_table() -> Check:
    golden = load_p_table()
    seq = polys.poly_sequence(10)
    bad = []
    for n, coeffs in golden.items():
        routes = [
            list(seq[n].coeffs),
            polys.coeffs_via_matrices(n),
            list(nested.pn_via_nested(n).coeffs),
            list(polys.poly_next_triple_sum(seq[:n]).coeffs) if n else [1],
        ]
        if any(r != coeffs for r in routes):
            bad.append(n)
    return Check("P_0..P_10 (four routes)", not bad, f"mismatches at {bad}" if bad else "11/11 exact")


def check_headline_bound() -> list[Check]:
    scan = approx.error_scan(9999, 0.001, 0.999)
    e2, e3 = scan.max_error["g2"], scan.max_error["g3"]
    return [
        _bound("max |g3 - S| on [0.001, 0.999]", e3, 0.0023, strict=True),
        Check("max |g2 - S| > max |g3 - S|", e2 > e3, f"{e2:.4g} vs {e3:.4g}"),
    ]


def check_hybrid_roundtrip() -> Check:
    tail = np.logspace(-12, -3, 200)
    p = np.concatenate([np.linspace(0.0, 1.0, 10001)[1:-1], tail, 1.0 - tail])
    s = series.probit_hybrid(p)
    scale = np.maximum(np.maximum(p, 1.0 - p), 1e-2)
    worst = float(np.max(np.abs(gauss.normal_cdf(s) - p) / scale))
    return _bound("hybrid round trip |N(S(p)) - p| / max(p, 1-p, 0.01)", worst, 1e-13)


def check_ode_residuals() -> list[Check]:
    h = 1e-6
    p = 0.1 + 0.8 * (np.arange(32) + 0.5) / 32
    d2 = gauss.s_derivative_n(p, 2)
    fd = (gauss.s_derivative_n(p + h, 1) - gauss.s_derivative_n(p - h, 1)) / (2 * h)
    s_rel = float(np.max(np.abs(d2 - fd) / np.abs(d2)))
    g0 = max(approx.g_ode_residual("g0", x) for x in np.linspace(0.005, 0.3, 25))
    g1 = max(approx.g_ode_residual("g1", x) for x in np.linspace(0.7, 0.995, 25))
    return [
        _bound("S'' = S S'^2 (finite differences)", s_rel, 1e-4),
        _bound("g0 modified ODE on x <= 0.3", g0, 1e-4),
        _bound("g1 modified ODE on x >= 0.7", g1, 1e-4),
    ]


def check_moments() -> list[Check]:
    out = []
    odd = max(abs(calculus.moment(n).quadrature) for n in (1, 3, 5, 7))
    out.append(_bound("odd moments vanish", odd, 1e-12))
    for n, expected in ((2, 1.0), (4, 3.0), (6, 15.0), (8, 105.0)):
        m = calculus.moment(n)
        out.append(
            Check(
                f"moment {n}: closed form {expected:g}",
                m.closed_form == expected and abs(m.quadrature - expected) <= 1e-9,
                f"quadrature {m.quadrature!r}, printed product {m.paper_formula:g}",
            )
        )
    return out


def check_identities() -> list[Check]:
    grid = np.linspace(0.05, 0.95, 17)
    cor = max(calculus.corollary_identity_check(x) for x in grid)
    neg = max(
        calculus.negative_derivative_relation_check(n, x)
        / (1.0 + abs(_s_n(n, x)))
        for n in (0, -1, -2)
        for x in grid
    )
    gf_ok = True
    worst = 0.0
    for x in (0.0, 1.0, -1.0):
        for t in (0.1, -0.1, 0.2, -0.2):
            errs = [abs(np.subtract(*calculus.generating_function_check(x, t, k))) for k in (5, 10, 15, 20)]
            gf_ok &= all(b <= a for a, b in zip(errs, errs[1:]))
            worst = max(worst, errs[-1])
    return [
        _bound("S(-2 sqrt(pi) S^(-2)) = sqrt(2) S", cor, 1e-9),
        _bound("negative-index derivative relation (scaled)", neg, 1e-12),
        Check("generating function converges", gf_ok and worst <= 1e-10, f"final error {worst:.3e}"),
    ]


def _s_n(n: int, x: float) -> float:
    if n == 0:
        return gauss.probit_reference(x).value
    return calculus.s_antiderivative(-n, x)


def check_lambert() -> list[Check]:
    x = np.logspace(-3, 12, 500)
    resid = float(np.max(lambertw.lambert_w0(x).residual))
    xs = np.linspace(-0.25, 0.25, 40)
    ser = max(abs(lambertw.lambert_w0_series(v, 60) - lambertw.lambert_w0(v).value) for v in xs)
    fd_worst = 0.0
    for v in (0.5, 1.0, 2.0, 10.0, 100.0):
        h = 1e-6 * v
        fd = (lambertw.lambert_w0(v + h).value - lambertw.lambert_w0(v - h).value) / (2 * h)
        d = lambertw.lambert_w0_derivative(v)
        fd_worst = max(fd_worst, abs(fd - d) / abs(d))
    return [
        _bound("W e^W = x (relative)", resid, 1e-14),
        _bound("W series vs Halley", ser, 1e-12),
        _bound("W derivative vs finite differences", fd_worst, 1e-7),
    ]


def _ulps(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b) / np.spacing(np.maximum(np.abs(a), np.abs(b)))))


def check_symmetry() -> list[Check]:
    grid = np.linspace(0.001, 0.999, 9999)
    # pairs (p, 1 - p) with both members exact
    hi = np.unique(np.where(grid >= 0.5, grid, 1.0 - grid))
    lo = 1.0 - hi
    ref = _ulps(gauss.probit_reference(lo).value, -gauss.probit_reference(hi).value)
    g2 = _ulps(approx.approx_eval("g2", lo), -approx.approx_eval("g2", hi))
    g3 = _ulps(approx.approx_eval("g3", lo), -approx.approx_eval("g3", hi))
    mirror = max(
        _ulps(approx.approx_eval("g1", hi), -approx.approx_eval("g0", lo)),
        _ulps(approx.approx_eval("g1", lo), -approx.approx_eval("g0", hi)),
    )
    return [
        _bound("S(1-p) = -S(p) (ulp)", ref, 2),
        _bound("g2 antisymmetry (ulp)", g2, 2),
        _bound("g3 antisymmetry (ulp)", g3, 2),
        _bound("g1(x) = -g0(1-x) (ulp)", mirror, 2),
    ]


CHECKS: list[Callable[[], Check | list[Check]]] = [
    check_c_table,
    check_p_table,
    check_headline_bound,
    check_hybrid_roundtrip,
    check_ode_residuals,
    check_moments,
    check_identities,
    check_lambert,
    check_symmetry,
]


def run_checks() -> list[Check]:
    results: list[Check] = []
    for fn in CHECKS:
        try:
            r = fn()
        except Exception as exc:  # a crashing check is a failed check
            r = Check(fn.__name__, False, f"{type(exc).__name__}: {exc}")
        results.extend(r if isinstance(r, list) else [r])
    return results
