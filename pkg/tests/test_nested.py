from fractions import Fraction
import math

import pytest

from invnorm.nested import ExpPolyTerm, RatPolynomial, nested_derivative, pn_via_nested
from invnorm.polys import IntPolynomial, poly_sequence

R = RatPolynomial


def test_pn_via_nested_examples():
    assert pn_via_nested(0) == IntPolynomial([1])
    assert pn_via_nested(2) == IntPolynomial([1, 0, 2])
    assert pn_via_nested(5) == IntPolynomial([0, 127, 0, 326, 0, 120])


def test_pn_via_nested_matches_recurrence():
    seq = poly_sequence(15)
    for n in range(16):
        assert pn_via_nested(n) == seq[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_nested_derivative_of_x(n):
    f = ExpPolyTerm(R([0, 1]), R([0]))
    out = nested_derivative(f, n)
    assert out.p == R([1]) and out.q.is_zero


@pytest.mark.parametrize("n", range(0, 9))
def test_nested_derivative_of_x_squared(n):
    f = ExpPolyTerm(R([0, 0, 1]), R([0]))
    out = nested_derivative(f, n)
    assert out.p == R([0] * n + [math.factorial(n + 1)])


@pytest.mark.parametrize("a", [Fraction(1), Fraction(2), Fraction(-1), Fraction(3, 2)])
@pytest.mark.parametrize("n", range(0, 9))
def test_nested_derivative_of_exponential(a, n):
    f = ExpPolyTerm(R([1]), R([0, a]))
    out = nested_derivative(f, n)
    assert out.p == R([math.factorial(n) * a**n])
    assert out.q == R([0, n * a])


@pytest.mark.parametrize("n", range(0, 7))
def test_exponent_is_n_times_q(n):
    q = R([Fraction(1, 3), 0, Fraction(-1, 2)])
    f = ExpPolyTerm(R([2, 1]), q)
    assert nested_derivative(f, n).q == R([n * c for c in q.coeffs])


def test_term_derivative_and_product():
    t = ExpPolyTerm(R([0, 1]), R([0, 0, Fraction(1, 2)]))
    d = t.derivative()
    assert d.p == R([1, 0, 1]) and d.q == t.q
    prod = t * t
    assert prod.p == R([0, 0, 1]) and prod.q == R([0, 0, 1])


def test_rat_polynomial_normalizes():
    assert R([Fraction(2, 4), 0, 0]).coeffs == (Fraction(1, 2),)
    assert R([0]).is_zero
    with pytest.raises(ArithmeticError):
        R([Fraction(1, 2)]).to_int()
