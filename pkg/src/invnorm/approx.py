"""Lambert-W asymptotic approximations of the probit function.

``g0`` and ``g1`` capture the behaviour at the left and right endpoints,
``g2`` glues them together with the factor ``2x - 1`` and ``g3`` replaces that
factor by the cubic ``Q`` so that the slope at 1/2 is also right.  The second
half of the module scores them against :func:`invnorm.gauss.probit_reference`.
"""

from __future__ import annotations

import csv
import math
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .gauss import _check_probability, _lower_tail, normal_cdf, probit_reference
from .lambertw import lambert_w0, lambert_w0_log

__all__ = [
    "QPoly",
    "Q",
    "ErrorScanRow",
    "ScanResult",
    "approx_eval",
    "q_eval",
    "error_scan",
    "tail_scan",
    "write_scan_csv",
    "read_scan_csv",
    "g_ode_residual",
    "KINDS",
]

ArrayLike = Union[float, np.ndarray]
KINDS = ("g0", "g1", "g2", "g3")
SQRT_2PI = math.sqrt(2.0 * math.pi)
_LOG_2PI = math.log(2.0 * math.pi)
_TWO_PI = 2.0 * math.pi
# below this 1/denom would overflow; W is then taken from the log of the argument
_TINY_DENOM = 1e-300


@dataclass(frozen=True)
class QPoly:
    """``Q(x) = c0 + c1 x + c2 x^2 + c3 x^3`` with each ``ck = a + b sqrt(2 pi)``.

    ``parts`` holds the exact integer pairs ``(a, b)`` of the published
    coefficients.  Evaluation uses the exact re-expansion about ``x = 1/2``,
    where only odd powers survive, so ``Q(1 - x) = -Q(x)`` holds bit for bit.
    """

    parts: tuple[tuple[int, int], ...] = ((-1, 0), (6, -2), (-12, 6), (8, -4))

    @property
    def coeffs(self) -> tuple[float, ...]:
        return tuple(a + b * SQRT_2PI for a, b in self.parts)

    def centered_parts(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Exact ``(a, b)`` pairs of the coefficients in powers of ``u = x - 1/2``."""
        half = Fraction(1, 2)
        out = []
        for m in range(len(self.parts)):
            a = b = Fraction(0)
            for k in range(m, len(self.parts)):
                w = math.comb(k, m) * half ** (k - m)
                a += w * self.parts[k][0]
                b += w * self.parts[k][1]
            out.append((a, b))
        return tuple(out)

    def centered(self) -> tuple[float, ...]:
        return tuple(float(a) + float(b) * SQRT_2PI for a, b in self.centered_parts())

    def __call__(self, x: ArrayLike) -> ArrayLike:
        c = self.centered()
        if c[0] != 0.0 or c[2] != 0.0:
            raise ArithmeticError("Q is expected to be odd about 1/2")
        u = np.asarray(x, dtype=float) - 0.5
        val = u * (c[1] + c[3] * (u * u))
        return float(val) if np.ndim(val) == 0 else val


Q = QPoly()


def q_eval(x: ArrayLike) -> ArrayLike:
    """The cubic factor used by g3."""
    return Q(x)


def _sqrt_w_of_inverse(denom: np.ndarray, log_denom) -> np.ndarray:
    """``sqrt(W(1 / denom))``; ``log_denom()`` supplies ``log(denom)`` where it underflows."""
    out = np.empty_like(denom)
    direct = denom > _TINY_DENOM
    out[direct] = np.sqrt(lambert_w0(1.0 / denom[direct]).value)
    if not direct.all():
        out[~direct] = np.sqrt(lambert_w0_log(-log_denom()[~direct]))
    return out


def _g_values(kind: str, x: np.ndarray) -> np.ndarray:
    if kind == "g0":
        return -_sqrt_w_of_inverse(_TWO_PI * (x * x), lambda: _LOG_2PI + 2.0 * np.log(x))
    if kind == "g1":
        return _sqrt_w_of_inverse(_TWO_PI * ((x - 1.0) * (x - 1.0)), lambda: _LOG_2PI + 2.0 * np.log1p(-x))
    if kind not in ("g2", "g3"):
        raise ValueError(f"unknown approximation {kind!r}; expected one of {KINDS}")
    # x*x*(x-1)^2 is symmetric under x <-> 1-x when both are exact
    denom = _TWO_PI * ((x * x) * ((x - 1.0) * (x - 1.0)))
    root = _sqrt_w_of_inverse(denom, lambda: _LOG_2PI + 2.0 * (np.log(x) + np.log1p(-x)))
    factor = (2.0 * x - 1.0) if kind == "g2" else np.asarray(Q(x))
    out = factor * root
    out[x == 0.5] = 0.0
    return out


def approx_eval(kind: str, x: ArrayLike) -> ArrayLike:
    """Evaluate ``g0``, ``g1``, ``g2`` or ``g3`` at probabilities in (0, 1)."""
    xa = np.atleast_1d(np.asarray(x, dtype=float)).copy()
    _check_probability(xa)
    out = _g_values(kind, xa)
    return float(out[0]) if np.ndim(x) == 0 else out


@dataclass(frozen=True)
class ErrorScanRow:
    x: float
    s_ref: float
    g0: float
    g1: float
    g2: float
    g3: float
    e0: float
    e1: float
    e2: float
    e3: float


CSV_HEADER = tuple(f.name for f in fields(ErrorScanRow))


@dataclass(frozen=True)
class ScanResult:
    """Rows of a scan plus the maximum absolute error of each approximation.

    ``max_forward`` is the maximum of ``|N(g(x)) - x|``, the error measured
    back in probability space.
    """

    rows: list[ErrorScanRow]
    max_error: dict[str, float]
    argmax: dict[str, float]
    max_forward: dict[str, float]


def _scan(x: np.ndarray) -> ScanResult:
    s_ref = np.asarray(probit_reference(x).value)
    g = {k: np.asarray(_g_values(k, x)) for k in KINDS}
    e = {k: np.abs(g[k] - s_ref) for k in KINDS}
    rows = [
        ErrorScanRow(*map(float, vals))
        for vals in zip(x, s_ref, g["g0"], g["g1"], g["g2"], g["g3"], e["g0"], e["g1"], e["g2"], e["g3"])
    ]
    max_error = {k: float(e[k].max()) for k in KINDS}
    argmax = {k: float(x[int(e[k].argmax())]) for k in KINDS}
    max_forward = {k: float(np.abs(_lower_tail(g[k]) - x).max()) for k in KINDS}
    return ScanResult(rows, max_error, argmax, max_forward)


def error_scan(grid_points: int, x_min: float, x_max: float) -> ScanResult:
    """Score g0..g3 against the reference on a uniform grid in ``[x_min, x_max]``.

    ``grid_points = 1`` is accepted as the single point ``x_min``.
    """
    if grid_points < 1:
        raise ValueError("grid_points must be positive")
    if not (0.0 < x_min <= x_max < 1.0) or (grid_points > 1 and x_min == x_max):
        raise ValueError(f"need 0 < x_min < x_max < 1, got [{x_min}, {x_max}]")
    x = np.linspace(x_min, x_max, grid_points) if grid_points > 1 else np.array([x_min], dtype=float)
    return _scan(x)


def tail_scan(points_per_side: int = 200, smallest: float = 1e-8, largest: float = 1e-3) -> ScanResult:
    """Log-spaced scan of both tails: ``x`` in ``[smallest, largest]`` and ``1 - x``."""
    left = np.logspace(math.log10(smallest), math.log10(largest), points_per_side)
    return _scan(np.concatenate([left, 1.0 - left[::-1]]))


def _fmt(v: float) -> str:
    return repr(float(v))


def write_scan_csv(rows: Iterable[ErrorScanRow], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in rows:
            w.writerow([_fmt(v) for v in astuple(row)])


def read_scan_csv(path) -> list[ErrorScanRow]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if tuple(header) != CSV_HEADER:
            raise ValueError(f"unexpected header {header}")
        return [ErrorScanRow(*map(float, rec)) for rec in reader]


def g_ode_residual(kind: str, x: float, h: float = 1e-6) -> float:
    """Relative residual of ``g'' = g g'^2 (1 + 2 / (g^2 (1 + g^2)))``.

    Derivatives are central differences with step ``h``.  Intended for the
    tails (``x <= 0.3`` for g0, ``x >= 0.7`` for g1).
    """
    if kind not in ("g0", "g1"):
        raise ValueError("the modified ODE is stated for g0 and g1 only")
    if not (h < x < 1.0 - h):
        raise ValueError("x must lie in (h, 1 - h)")
    lo, mid, hi = (approx_eval(kind, v) for v in (x - h, x, x + h))
    # use the steps actually represented in floating point
    h_lo = x - (x - h)
    h_hi = (x + h) - x
    d1 = (hi - lo) / (h_lo + h_hi)
    d2 = 2.0 * ((hi - mid) / h_hi - (mid - lo) / h_lo) / (h_lo + h_hi)
    g = mid
    rhs = g * d1 * d1 * (1.0 + 2.0 / (g * g * (1.0 + g * g)))
    return abs(d2 - rhs) / abs(d2)


def forward_error(kind: str, x: ArrayLike) -> ArrayLike:
    """``|N(g(x)) - x|``: approximation error mapped back to probability."""
    return np.abs(np.asarray(normal_cdf(approx_eval(kind, x))) - np.asarray(x))
