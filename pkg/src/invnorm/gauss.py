"""Standard normal density, distribution function and the reference probit.

The distribution function is built from scratch in the variable ``x`` (no
rescaling by sqrt(2), which would cost ``x**2`` ulps of relative accuracy in
the far tail):

* ``|x| <= SERIES_CUTOFF``: ``N(x) = 1/2 + phi(x) * sum_k x^(2k+1) / (2k+1)!!``
* otherwise the tail ``phi(x) * R(|x|)`` with the Mills ratio ``R`` from its
  continued fraction ``1/(x + 1/(x + 2/(x + 3/(x + ...))))`` evaluated by the
  modified Lentz algorithm.

The reference inverse runs Newton's method on ``N(x) = p`` with a bisection
safeguard.  It is the oracle every approximation in the package is scored
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .polys import poly_eval, poly_sequence

__all__ = [
    "ProbitResult",
    "ProbitDomainError",
    "normal_pdf",
    "normal_cdf",
    "normal_sf",
    "probit_reference",
    "s_derivative_n",
]

ArrayLike = Union[float, np.ndarray]

SQRT_2PI = math.sqrt(2.0 * math.pi)
INV_SQRT_2PI = 1.0 / SQRT_2PI
SERIES_CUTOFF = 1.5
CF_MAX_TERMS = 2000
NEWTON_MAX_ITER = 100


class ProbitDomainError(ValueError):
    pass


@dataclass(frozen=True)
class ProbitResult:
    """Reference inverse ``S(p)`` with ``residual = N(value) - p``."""

    value: ArrayLike
    residual: ArrayLike
    iterations: int


def _prep(x: ArrayLike) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    return np.atleast_1d(arr).astype(float, copy=True), arr.ndim == 0


def _out(a: np.ndarray, scalar: bool) -> ArrayLike:
    return float(a[0]) if scalar else a


def _exp_half_square(x: np.ndarray) -> np.ndarray:
    """``exp(-x**2 / 2)`` without the rounding error of forming ``x*x``."""
    ax = np.abs(x)
    hi = np.trunc(ax * 16.0) / 16.0
    lo = ax - hi
    with np.errstate(under="ignore"):
        return np.exp(-0.5 * hi * hi) * np.exp(-0.5 * lo * (ax + hi))


def _pdf(x: np.ndarray) -> np.ndarray:
    return INV_SQRT_2PI * _exp_half_square(x)


def normal_pdf(x: ArrayLike) -> ArrayLike:
    """Standard normal density ``exp(-x^2/2) / sqrt(2 pi)``."""
    xa, scalar = _prep(x)
    return _out(_pdf(xa), scalar)


def _central_sum(x: np.ndarray) -> np.ndarray:
    """``sum_k x^(2k+1) / (1*3*...*(2k+1))``; every term has the sign of x."""
    x2 = x * x
    term = x.copy()
    total = x.copy()
    k = 0
    while True:
        k += 1
        term = term * x2 / (2 * k + 1)
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            return total


def _mills_ratio(x: np.ndarray) -> np.ndarray:
    """``(1 - N(x)) / phi(x)`` for ``x > 0`` by modified Lentz."""
    tiny = 1e-300
    f = x.copy()
    C = f.copy()
    D = np.zeros_like(x)
    active = np.ones(x.shape, dtype=bool)
    for n in range(1, CF_MAX_TERMS):
        D = x + n * D
        D = np.where(D == 0.0, tiny, D)
        D = 1.0 / D
        C = x + n / C
        C = np.where(C == 0.0, tiny, C)
        delta = C * D
        f = np.where(active, f * delta, f)
        active &= np.abs(delta - 1.0) > 1e-16
        if not active.any():
            return 1.0 / f
    raise ArithmeticError("Mills-ratio continued fraction did not converge")


def _lower_tail(x: np.ndarray) -> np.ndarray:
    """N(x), accurate relative to N(x) itself for x <= 0 and to 1 - N(x) for x > 0."""
    out = np.empty_like(x)
    nan = np.isnan(x)
    out[nan] = np.nan

    central = (~nan) & (np.abs(x) <= SERIES_CUTOFF)
    xc = x[central]
    out[central] = 0.5 + _pdf(xc) * _central_sum(xc)

    tail = (~nan) & (~central)
    xt = x[tail]
    ax = np.abs(xt)
    finite = np.isfinite(ax)
    t = np.zeros_like(ax)
    with np.errstate(under="ignore"):
        t[finite] = _pdf(ax[finite]) * _mills_ratio(ax[finite])
    out[tail] = np.where(xt < 0.0, t, 1.0 - t)
    return out


def normal_cdf(x: ArrayLike) -> ArrayLike:
    """Standard normal distribution function N(x).

    Relative accuracy is a few 1e-15 in the lower tail for x >= -38, where
    results start to lose bits to the subnormal range; NaN propagates.
    """
    xa, scalar = _prep(x)
    return _out(_lower_tail(xa), scalar)


def normal_sf(x: ArrayLike) -> ArrayLike:
    """Upper tail ``1 - N(x)``, computed as ``N(-x)`` without cancellation."""
    xa, scalar = _prep(x)
    return _out(_lower_tail(-xa), scalar)


def _g2_seed(q: np.ndarray) -> np.ndarray:
    from .approx import approx_eval  # approx imports this module

    return np.asarray(approx_eval("g2", q), dtype=float)


def _invert_lower(q: np.ndarray) -> tuple[np.ndarray, int]:
    """Solve ``N(x) = q`` for ``0 < q <= 1/2`` (so ``x <= 0``)."""
    x = _g2_seed(q)
    lo = np.full_like(q, -40.0)
    hi = np.zeros_like(q)
    x = np.clip(x, lo, hi)
    x[q == 0.5] = 0.0

    active = q != 0.5
    prev = np.full_like(q, np.inf)
    it = 0
    while active.any():
        if it >= NEWTON_MAX_ITER:
            raise ArithmeticError(f"reference inversion exceeded {NEWTON_MAX_ITER} iterations")
        it += 1
        xa = x[active]
        qa = q[active]
        r = _lower_tail(xa) - qa
        above = r > 0.0
        hi_a = np.where(above, np.minimum(hi[active], xa), hi[active])
        lo_a = np.where(above, lo[active], np.maximum(lo[active], xa))
        dens = _pdf(xa)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            step = r / dens
        x_new = xa - step
        bad = ~np.isfinite(x_new) | (x_new < lo_a) | (x_new > hi_a)
        bad &= r != 0.0
        x_new = np.where(bad, 0.5 * (lo_a + hi_a), x_new)
        moved = np.abs(x_new - xa)
        done = (r == 0.0) | (moved <= 2.0 * np.spacing(np.abs(x_new)))
        done |= (~bad) & (moved >= prev[active]) & (moved < 1e-12 * np.maximum(1.0, np.abs(x_new)))

        idx = np.flatnonzero(active)
        x[idx] = x_new
        lo[idx] = lo_a
        hi[idx] = hi_a
        prev[idx] = moved
        active[idx[done]] = False
    return x, it


def _check_probability(pa: np.ndarray) -> None:
    if np.any(~(pa > 0.0)) or np.any(~(pa < 1.0)):
        raise ProbitDomainError("probability must lie strictly inside (0, 1)")


def _reference_values(pa: np.ndarray) -> tuple[np.ndarray, int]:
    upper = pa > 0.5
    # 1 - p is exact for p > 1/2; reflect there and negate
    q = np.where(upper, 1.0 - pa, pa)
    x, it = _invert_lower(q)
    return np.where(upper, -x, x), it


def probit_reference(p: ArrayLike) -> ProbitResult:
    """Reference inverse of N by safeguarded Newton iteration.

    >>> probit_reference(0.5).value
    0.0
    """
    pa, scalar = _prep(p)
    _check_probability(pa)
    v, it = _reference_values(pa)
    resid = _lower_tail(v) - pa
    return ProbitResult(_out(v, scalar), _out(resid, scalar), it)


def s_derivative_n(p: ArrayLike, n: int) -> ArrayLike:
    """n-th derivative of the probit function, ``P_{n-1}(S) * (S')**n``.

    ``S' = sqrt(2 pi) exp(S**2 / 2) = 1 / phi(S)``.  Overflows to infinity
    near the endpoints for large n.
    """
    if n < 1:
        raise ValueError(f"derivative order must be >= 1, got {n}")
    pa, scalar = _prep(p)
    _check_probability(pa)
    s, _ = _reference_values(pa)
    with np.errstate(over="ignore", invalid="ignore"):
        dS = 1.0 / _pdf(s)
        val = poly_eval(poly_sequence(n - 1)[n - 1], s) * dS**n
    return _out(np.asarray(val, dtype=float), scalar)
