"""Central Taylor series of the probit function and the hybrid evaluator.

About ``u = p - 1/2`` only odd powers appear::

    S(p) = sum_k (2 pi)^((2k+1)/2) C_{2k+1} / (2k+1)! * u^(2k+1)

with the exact integers C_n from :mod:`invnorm.polys`.  The series converges
for ``|u| < 1/2``; :func:`probit_hybrid` uses it for ``|u| <= 0.3`` and
otherwise polishes the g2 asymptotic seed with a few Newton steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Union

import mpmath
import numpy as np

from .gauss import _check_probability, _lower_tail, _pdf
from .polys import series_coeff_c

__all__ = [
    "EvalConfig",
    "SeriesTerms",
    "SeriesValue",
    "SeriesDomainError",
    "taylor_terms",
    "s_series",
    "probit_hybrid",
    "hybrid_newton_steps",
]

ArrayLike = Union[float, np.ndarray]


class SeriesDomainError(ValueError):
    pass


@dataclass(frozen=True)
class EvalConfig:
    """Knobs for the floating-point evaluators.

    term_tol: stop the series once the next summand is below
        ``term_tol * |partial sum|``.
    term_cap: maximum number of series terms.
    newton_tol: stop Newton once ``|N(x) - p| <= newton_tol * min(p, 1 - p)``.
    newton_max_iter: cap on Newton steps in the tails.
    switch_radius: the series is used for ``|p - 1/2| <= switch_radius``.
    """

    term_tol: float = 1e-17
    term_cap: int = 120
    newton_tol: float = 1e-15
    newton_max_iter: int = 8
    switch_radius: float = 0.3

    def __post_init__(self):
        if not 0.0 < self.switch_radius < 0.5:
            raise ValueError("switch_radius must lie in (0, 1/2)")
        if self.term_cap < 1 or self.newton_max_iter < 1:
            raise ValueError("caps must be positive")


DEFAULT_CONFIG = EvalConfig()


@dataclass(frozen=True)
class SeriesTerms:
    """Floating factors ``(2 pi)^((2k+1)/2) C_{2k+1} / (2k+1)!``, ``k = 0..k_max``."""

    terms: tuple[float, ...]
    generated_from: int


@lru_cache(maxsize=8)
def taylor_terms(k_max: int) -> SeriesTerms:
    """Series factors, each rounded to binary64 exactly once."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    table = series_coeff_c(2 * k_max + 1)
    out = []
    with mpmath.workdps(60):
        two_pi = 2 * mpmath.pi
        for k in range(k_max + 1):
            n = 2 * k + 1
            exact = mpmath.mpf(table[n]) / mpmath.mpf(math.factorial(n))
            out.append(float(exact * two_pi ** (mpmath.mpf(n) / 2)))
    return SeriesTerms(tuple(out), k_max + 1)


class SeriesValue(NamedTuple):
    value: float
    terms_used: int
    last_term: float


def s_series(x: float, config: EvalConfig = DEFAULT_CONFIG) -> SeriesValue:
    """Sum the central series at ``x`` and report where it was truncated.

    ``last_term`` is the magnitude of the last summand that was added.
    """
    u = x - 0.5
    if not abs(u) <= config.switch_radius:
        raise SeriesDomainError(f"|x - 1/2| = {abs(u)} exceeds the series radius {config.switch_radius}")
    if u == 0.0:
        return SeriesValue(0.0, 1, 0.0)
    a = taylor_terms(config.term_cap - 1).terms
    u2 = u * u
    power = u
    summands = []
    partial = 0.0
    for k in range(config.term_cap):
        s = a[k] * power
        if summands and abs(s) < config.term_tol * abs(partial):
            break
        summands.append(s)
        partial += s
        power *= u2
    # all summands share the sign of u: add smallest first
    return SeriesValue(math.fsum(reversed(summands)), len(summands), abs(summands[-1]))


@lru_cache(maxsize=16)
def _horner_factors(config: EvalConfig) -> tuple[float, ...]:
    """Factors needed at the edge of the series region, where convergence is slowest."""
    edge = config.switch_radius
    a = taylor_terms(config.term_cap - 1).terms
    partial = 0.0
    power = edge
    n = 0
    for k in range(config.term_cap):
        s = a[k] * power
        if n and s < config.term_tol * partial:
            break
        partial += s
        power *= edge * edge
        n += 1
    return a[:n]


def _series_array(u: np.ndarray, config: EvalConfig) -> np.ndarray:
    a = _horner_factors(config)
    u2 = u * u
    acc = np.full_like(u, a[-1])
    for c in reversed(a[:-1]):
        acc = acc * u2 + c
    return u * acc


def _polish_lower(q: np.ndarray, config: EvalConfig) -> tuple[np.ndarray, np.ndarray]:
    """Newton with the Halley correction on ``N(x) = q``, ``0 < q < 1/2``."""
    from .approx import approx_eval

    x = np.asarray(approx_eval("g2", q), dtype=float)
    active = np.ones(q.shape, dtype=bool)
    prev = np.full_like(q, np.inf)
    steps = np.zeros(q.shape, dtype=int)
    while active.any():
        xa = x[active]
        qa = q[active]
        r = _lower_tail(xa) - qa
        t = r / _pdf(xa)
        x_new = xa - t / (1.0 + 0.5 * xa * t)
        moved = np.abs(x_new - xa)
        conv = np.abs(r) <= config.newton_tol * qa
        # rounding noise in N makes the last few ulps cycle; keep the earlier iterate
        conv |= (moved >= prev[active]) & (moved < 1e-12 * np.maximum(1.0, np.abs(xa)))
        idx = np.flatnonzero(active)
        x[idx] = np.where(conv, xa, x_new)
        prev[idx] = moved
        steps[idx[~conv]] += 1
        # cubic convergence: once a step is this small the remaining error is below 1 ulp
        conv |= moved <= 1e-8 * np.maximum(1.0, np.abs(x_new))
        conv |= steps[idx] >= config.newton_max_iter
        active[idx[conv]] = False
    return x, steps


def _hybrid(pa: np.ndarray, config: EvalConfig) -> tuple[np.ndarray, np.ndarray]:
    upper = pa > 0.5
    # 1 - p is exact for p > 1/2, so both halves evaluate at identical |u|
    q = np.where(upper, 1.0 - pa, pa)
    out = np.empty_like(q)
    central = (0.5 - q) <= config.switch_radius
    out[central] = _series_array(q[central] - 0.5, config)
    steps = np.zeros(q.shape, dtype=int)
    if (~central).any():
        out[~central], steps[~central] = _polish_lower(q[~central], config)
    return np.where(upper, -out, out), steps


def probit_hybrid(p: ArrayLike, config: EvalConfig = DEFAULT_CONFIG) -> ArrayLike:
    """Production probit: central series, otherwise g2 seed plus Newton polish.

    >>> probit_hybrid(0.5)
    0.0
    """
    arr = np.asarray(p, dtype=float)
    pa = np.atleast_1d(arr).astype(float, copy=True)
    _check_probability(pa)
    out, _ = _hybrid(pa, config)
    return float(out[0]) if arr.ndim == 0 else out


def hybrid_newton_steps(p: ArrayLike, config: EvalConfig = DEFAULT_CONFIG) -> ArrayLike:
    """Newton steps the hybrid evaluator applies at each ``p`` (0 in the series region)."""
    arr = np.asarray(p, dtype=float)
    pa = np.atleast_1d(arr).astype(float, copy=True)
    _check_probability(pa)
    steps = _hybrid(pa, config)[1]
    return int(steps[0]) if arr.ndim == 0 else steps
