"""Integrals of the probit function and identity checks built on them.

Closed forms used here (S is the probit function, N the normal CDF)::

    S^(-1)(x) = int_0^x S      = -exp(-S(x)^2 / 2) / sqrt(2 pi)
    S^(-2)(x) = int_0^x S^(-1) = -N(sqrt(2) S(x)) / (2 sqrt(pi))

and the polynomials continued to negative index, ``P_{-1}(x) = x``,
``P_{-2}(x) = -1``, ``P_{-3}(x) = -sqrt(pi) exp(x^2) N(sqrt(2) x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gauss import _check_probability, normal_cdf, normal_pdf, probit_reference
from .polys import poly_eval, poly_sequence

__all__ = [
    "MomentResult",
    "s_antiderivative",
    "p_negative_eval",
    "negative_derivative_relation_check",
    "corollary_identity_check",
    "moment",
    "simpson",
    "generating_function_check",
]

SQRT_PI = math.sqrt(math.pi)
SQRT_2PI = math.sqrt(2.0 * math.pi)
SQRT_2 = math.sqrt(2.0)


def _probability(x: float) -> None:
    _check_probability(np.atleast_1d(np.asarray(x, dtype=float)))


def s_antiderivative(order: int, x: float) -> float:
    """First or second repeated integral of S from 0 to ``x``."""
    _probability(x)
    s = probit_reference(x).value
    if order == 1:
        return -normal_pdf(s)
    if order == 2:
        return -normal_cdf(SQRT_2 * s) / (2.0 * SQRT_PI)
    raise ValueError(f"order must be 1 or 2, got {order}")


def p_negative_eval(n: int, x: float) -> float:
    """P_n(x) for ``n`` in {-1, -2, -3}."""
    if n == -1:
        return float(x)
    if n == -2:
        return -1.0
    if n == -3:
        if abs(x) > 25.0:
            raise OverflowError("P_{-3} is only evaluated for |x| <= 25")
        return -SQRT_PI * math.exp(x * x) * normal_cdf(SQRT_2 * x)
    raise ValueError(f"n must be -1, -2 or -3, got {n}")


def negative_derivative_relation_check(n: int, x: float) -> float:
    """``|S^(n)(x) - P_{n-1}(S) (S')^n|`` for ``n`` in {0, -1, -2}.

    The left side comes from the antiderivative closed forms, the right side
    from the negative-index polynomials with ``S' = sqrt(2 pi) exp(S^2 / 2)``.
    """
    _probability(x)
    s = probit_reference(x).value
    if n == 0:
        lhs = s
    elif n in (-1, -2):
        lhs = s_antiderivative(-n, x)
    else:
        raise ValueError(f"n must be 0, -1 or -2, got {n}")
    ds = SQRT_2PI * math.exp(0.5 * s * s)
    rhs = p_negative_eval(n - 1, s) * ds**n
    return abs(lhs - rhs)


def corollary_identity_check(x: float) -> float:
    """``|S(-2 sqrt(pi) S^(-2)(x)) - sqrt(2) S(x)|``."""
    _probability(x)
    inner = -2.0 * SQRT_PI * s_antiderivative(2, x)
    if not 0.0 < inner < 1.0:
        raise ValueError(f"inner argument {inner} left (0, 1)")
    return abs(probit_reference(inner).value - SQRT_2 * probit_reference(x).value)


@dataclass(frozen=True)
class MomentResult:
    """``int_0^1 S(x)^n dx`` three ways.

    closed_form: Gaussian moment, ``(n-1)!!`` for even n and 0 for odd n.
    quadrature: Simpson's rule on ``z^n phi(z)`` after substituting ``x = N(z)``.
    paper_formula: the product ``prod_{i=1}^{n/2} (2i+1)`` for even n, 0 for odd
        n; it is one odd factor ahead of the Gaussian moment and is kept for
        comparison only.
    """

    n: int
    closed_form: float
    quadrature: float
    paper_formula: float


def simpson(f, a: float, b: float, intervals: int) -> float:
    """Composite Simpson rule with a compensated (``math.fsum``) sum."""
    if intervals < 2 or intervals % 2:
        raise ValueError("Simpson's rule needs an even number of intervals >= 2")
    z = np.linspace(a, b, intervals + 1)
    w = np.ones(intervals + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    h = (b - a) / intervals
    return h / 3.0 * math.fsum(w * f(z))


def _double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2)) if m > 0 else 1


def moment(n: int, intervals: int = 1_000_000, z_max: float = 12.0) -> MomentResult:
    if not 0 <= n <= 20:
        raise ValueError("moments are supported for 0 <= n <= 20")
    if n % 2:
        closed = 0.0
        printed = 0.0
    else:
        closed = float(_double_factorial(n - 1))
        printed = float(math.prod(2 * i + 1 for i in range(1, n // 2 + 1)))
    quad = simpson(lambda z: z**n * normal_pdf(z), -z_max, z_max, intervals)
    return MomentResult(n, closed, quad, printed)


def generating_function_check(x: float, t: float, k_max: int) -> tuple[float, float]:
    """Partial sum of ``sum_k P_k(x) t^k / k!`` and its closed form.

    The closed form is ``exp(S(N(x) + t N'(x))^2 / 2 - x^2 / 2)``, which is
    exactly 1 at ``t = 0``.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    arg = normal_cdf(x) + t * normal_pdf(x)
    if not 0.0 < arg < 1.0:
        raise ValueError(f"N(x) + t N'(x) = {arg} is outside (0, 1)")
    polys = poly_sequence(k_max)
    terms = [poly_eval(polys[k], x) * t**k / math.factorial(k) for k in range(k_max + 1)]
    partial = math.fsum(terms)
    if t == 0.0:
        return partial, 1.0
    s = probit_reference(arg).value
    reference = math.exp(0.5 * (s - x) * (s + x))
    return partial, reference
