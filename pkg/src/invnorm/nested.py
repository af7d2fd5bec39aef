"""Symbolic nested derivatives on single terms ``p(x) * exp(q(x))``.

The nested derivative is ``D0[f] = 1`` and ``Dn[f] = d/dx (f * D(n-1)[f])``.
Applied to ``exp(x**2 / 2)`` it yields ``P_n(x) * exp(n x**2 / 2)``, which is
the fourth independent route to the P_n polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .polys import IntPolynomial

__all__ = ["RatPolynomial", "ExpPolyTerm", "nested_derivative", "pn_via_nested"]

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class RatPolynomial:
    """Dense polynomial with exact rational coefficients (lowest terms)."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence[Rational]):
        c = [Fraction(v) for v in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (Fraction(0),))

    @classmethod
    def constant(cls, value: Rational) -> RatPolynomial:
        return cls([value])

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    @property
    def degree(self) -> int:
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: RatPolynomial) -> RatPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPolynomial([self[k] + other[k] for k in range(n)])

    def __mul__(self, other: RatPolynomial | Rational) -> RatPolynomial:
        if not isinstance(other, RatPolynomial):
            return RatPolynomial([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> RatPolynomial:
        return RatPolynomial([k * c for k, c in enumerate(self.coeffs)][1:] or [0])

    def to_int(self) -> IntPolynomial:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ArithmeticError(f"non-integer coefficient in {self.coeffs}")
        return IntPolynomial([int(c) for c in self.coeffs])


@dataclass(frozen=True)
class ExpPolyTerm:
    """The function ``p(x) * exp(q(x))``."""

    p: RatPolynomial
    q: RatPolynomial

    @classmethod
    def from_coeffs(cls, p: Sequence[Rational], q: Sequence[Rational] = (0,)) -> ExpPolyTerm:
        return cls(RatPolynomial(p), RatPolynomial(q))

    def derivative(self) -> ExpPolyTerm:
        return ExpPolyTerm(self.p.derivative() + self.p * self.q.derivative(), self.q)

    def __mul__(self, other: ExpPolyTerm) -> ExpPolyTerm:
        return ExpPolyTerm(self.p * other.p, self.q + other.q)


_ONE = ExpPolyTerm(RatPolynomial([1]), RatPolynomial([0]))


def nested_derivative(f: ExpPolyTerm, n: int) -> ExpPolyTerm:
    """Apply the nested derivative of order ``n`` to ``f``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    d = _ONE
    for _ in range(n):
        d = (f * d).derivative()
    return d


def pn_via_nested(n: int) -> IntPolynomial:
    """P_n as ``exp(-n x^2/2) * Dn[exp(x^2/2)]``."""
    gauss = ExpPolyTerm.from_coeffs([1], [0, 0, Fraction(1, 2)])
    d = nested_derivative(gauss, n)
    expected_q = RatPolynomial([0, 0, Fraction(n, 2)])
    if d.q != expected_q:
        raise ArithmeticError(f"exponent {d.q.coeffs} != n x^2 / 2")
    return d.p.to_int()
