"""Principal branch of the Lambert W function, ``W(x) * exp(W(x)) = x``.

Halley iteration from a piecewise initial guess, the Maclaurin series inside
its radius 1/e, and the derivative ``W / (x (1 + W))``.  All iterative
routines accept scalars or numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "WResult",
    "LambertWDomainError",
    "LambertWConvergenceError",
    "lambert_w0",
    "lambert_w0_log",
    "lambert_w0_series",
    "lambert_w0_derivative",
]

ArrayLike = Union[float, np.ndarray]

INV_E = math.exp(-1.0)
BRANCH_TOL = 1e-15
MAX_ITER = 50


class LambertWDomainError(ValueError):
    pass


class LambertWConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class WResult:
    """Value of W0 with iteration count and relative residual ``|w e^w - x| / |x|``."""

    value: ArrayLike
    iterations: int
    residual: ArrayLike


def _seed_series(x):
    return x - x * x + 1.5 * x**3 - 8.0 / 3.0 * x**4


def _initial_guess(x: np.ndarray) -> np.ndarray:
    w = np.empty_like(x)

    near_branch = x < -0.25
    # expansion about the branch point in p = sqrt(2 (e x + 1))
    p = np.sqrt(np.maximum(2.0 * (math.e * x[near_branch] + 1.0), 0.0))
    w[near_branch] = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p**3

    small = (~near_branch) & (x <= 0.25)
    w[small] = _seed_series(x[small])

    # linear blend from the series seed at 0.25 to the anchor W(e) = 1
    mid = (x > 0.25) & (x < math.e)
    w0 = _seed_series(np.float64(0.25))
    w[mid] = w0 + (x[mid] - 0.25) * (1.0 - w0) / (math.e - 0.25)

    big = x >= math.e
    L1 = np.log(x[big])
    L2 = np.log(L1)
    w[big] = L1 - L2 + L2 / L1
    return w


def _halley(x: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, int]:
    active = np.isfinite(x) & (x != 0.0)
    prev = np.full_like(w, np.inf)
    it = 0
    while active.any():
        if it >= MAX_ITER:
            raise LambertWConvergenceError(f"no convergence after {MAX_ITER} Halley steps")
        it += 1
        wa = w[active]
        xa = x[active]
        ew = np.exp(wa)
        f = wa * ew - xa
        wp1 = wa + 1.0
        with np.errstate(invalid="ignore", divide="ignore"):
            denom = ew * wp1 - (wa + 2.0) * f / (2.0 * wp1)
            step = np.where(denom != 0.0, f / denom, 0.0)
        step = np.where(np.isfinite(step), step, 0.0)
        w_new = np.maximum(wa - step, -1.0)
        moved = np.abs(w_new - wa)
        done = moved <= 2.0 * np.spacing(np.abs(w_new))
        # rounding noise in w e^w - x can cycle a few ulp near the branch point
        done |= (moved >= prev[active]) & (moved < 1e-12 * np.maximum(1.0, np.abs(w_new)))
        w[active] = w_new
        idx = np.flatnonzero(active)
        prev[idx] = moved
        active[idx[done]] = False
    return w, it


def _as_array(x: ArrayLike) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    return np.atleast_1d(arr).astype(float, copy=True), arr.ndim == 0


def lambert_w0(x: ArrayLike) -> WResult:
    """Principal branch W0(x) for ``x >= -1/e``.

    Arguments within ``1e-15`` below ``-1/e`` are clamped to the branch point.
    Raises :class:`LambertWDomainError` below that and
    :class:`LambertWConvergenceError` if Halley's method stalls.

    >>> round(lambert_w0(1.0).value, 12)
    0.56714329041
    """
    xa, scalar = _as_array(x)
    if np.any(~(xa >= -INV_E - BRANCH_TOL)):
        raise LambertWDomainError("Lambert W0 is undefined below -1/e (or at NaN)")
    xa = np.maximum(xa, -INV_E)
    w = _initial_guess(xa)
    w[xa == 0.0] = 0.0
    w[xa == np.inf] = np.inf
    w, it = _halley(xa, w)
    w[xa == -INV_E] = -1.0

    with np.errstate(invalid="ignore", over="ignore"):
        resid = np.abs(w * np.exp(w) - xa) / np.abs(xa)
    resid = np.where(xa == 0.0, np.abs(w), resid)
    resid = np.where(np.isinf(xa), 0.0, resid)
    if scalar:
        return WResult(float(w[0]), it, float(resid[0]))
    return WResult(w, it, resid)


def lambert_w0_log(log_x: ArrayLike) -> ArrayLike:
    """W0(exp(log_x)) for ``log_x >= 1``, without forming ``exp(log_x)``.

    Solves ``w + log(w) = log_x`` by Newton's method; used where the direct
    argument would overflow.
    """
    L, scalar = _as_array(log_x)
    if np.any(L < 1.0):
        raise LambertWDomainError("log-argument form requires log_x >= 1")
    w = L - np.log(L)
    w = np.maximum(w, 0.5)
    for _ in range(MAX_ITER):
        f = w + np.log(w) - L
        step = f / (1.0 + 1.0 / w)
        w = w - step
        if np.all(np.abs(step) <= 2.0 * np.spacing(w)):
            break
    else:
        raise LambertWConvergenceError("log-form iteration did not converge")
    return float(w[0]) if scalar else w


def lambert_w0_series(x: float, terms: int) -> float:
    """Partial sum ``sum_{n=1}^{terms} (-n)^(n-1) / n! * x^n``; needs ``|x| < 1/e``."""
    if terms < 1:
        raise ValueError("terms must be positive")
    if not abs(x) < INV_E:
        raise LambertWDomainError(f"series diverges for |x| >= 1/e (x={x})")
    total = 0.0
    xn = 1.0
    for n in range(1, terms + 1):
        xn *= x
        # (-n)^(n-1) / n! grows like e^n; go through logs to stay in range
        mag = math.exp((n - 1) * math.log(n) - math.lgamma(n + 1)) if n > 1 else 1.0
        sign = -1.0 if (n - 1) % 2 else 1.0
        total += sign * mag * xn
    return total


def lambert_w0_derivative(x: ArrayLike) -> ArrayLike:
    """``dW/dx = W / (x (1 + W))``; singular at 0 and at -1/e."""
    xa, scalar = _as_array(x)
    if np.any(xa == 0.0) or np.any(np.abs(xa + INV_E) <= BRANCH_TOL):
        raise LambertWDomainError("derivative formula is singular at x = 0 and x = -1/e")
    w = lambert_w0(xa).value
    d = w / (xa * (1.0 + w))
    return float(d[0]) if scalar else d
