import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from invnorm.lambertw import (
    LambertWDomainError,
    lambert_w0,
    lambert_w0_derivative,
    lambert_w0_log,
    lambert_w0_series,
)


def test_w0_examples(omega):
    assert lambert_w0(0.0).value == 0.0
    assert lambert_w0(math.e).value == pytest.approx(1.0, abs=1e-15)
    assert lambert_w0(1.0).value == pytest.approx(omega, abs=1e-15)
    assert omega == pytest.approx(0.5671432904097838, abs=1e-15)


def test_w0_branch_point():
    assert lambert_w0(-1 / math.e).value == pytest.approx(-1.0, abs=1e-7)


def test_w0_domain():
    with pytest.raises(LambertWDomainError):
        lambert_w0(-0.5)
    with pytest.raises(LambertWDomainError):
        lambert_w0(float("nan"))


def test_w0_residual_on_log_grid():
    x = np.logspace(-3, 12, 500)
    r = lambert_w0(x)
    assert np.max(np.abs(r.value * np.exp(r.value) - x) / x) <= 1e-14
    assert np.max(r.residual) <= 1e-14
    assert np.all(np.diff(r.value) > 0)


@given(st.floats(-1 / math.e + 1e-9, 1e300))
def test_w0_defining_equation(x):
    w = lambert_w0(x).value
    if x == 0:
        assert w == 0
        return
    # compare logs to stay clear of overflow in w e^w
    if x > 0:
        assert math.log(w) + w == pytest.approx(math.log(x), rel=1e-13, abs=1e-13)
    else:
        assert w * math.exp(w) == pytest.approx(x, rel=1e-9)


def test_w0_log_form_matches_direct():
    for x in (math.e, 10.0, 1e100, 1e300):
        assert lambert_w0_log(math.log(x)) == pytest.approx(lambert_w0(x).value, rel=1e-14)
    # far beyond the binary64 range
    w = lambert_w0_log(5000.0)
    assert w + math.log(w) == pytest.approx(5000.0, rel=1e-15)


def test_series_examples():
    assert lambert_w0_series(0.0, 5) == 0.0
    assert lambert_w0_series(0.1, 1) == 0.1
    # 30 terms leave a truncation error near 9.5e-12, so the partial sum is
    # checked against its exact value and the 60-term sum against W itself
    exact30 = mpmath.nsum(lambda n: (-n) ** (n - 1) / mpmath.factorial(n) * mpmath.mpf(0.2) ** n, [1, 30])
    assert lambert_w0_series(0.2, 30) == pytest.approx(float(exact30), abs=1e-16)
    assert abs(lambert_w0_series(0.2, 60) - lambert_w0(0.2).value) <= 1e-15


def test_series_agrees_on_interval():
    xs = np.linspace(-0.25, 0.25, 40)
    assert max(abs(lambert_w0_series(v, 60) - lambert_w0(v).value) for v in xs) <= 1e-12


def test_series_outside_radius():
    with pytest.raises(ValueError):
        lambert_w0_series(0.5, 10)


def test_derivative_examples(omega):
    assert lambert_w0_derivative(math.e) == pytest.approx(1 / (2 * math.e), rel=1e-15)
    assert lambert_w0_derivative(1.0) == pytest.approx(omega / (1 + omega), rel=1e-15)
    h = 1e-6
    fd = (lambert_w0(5 + h).value - lambert_w0(5 - h).value) / (2 * h)
    assert abs(fd - lambert_w0_derivative(5.0)) <= 1e-8


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 10.0, 100.0])
def test_derivative_matches_finite_differences(x):
    h = 1e-6 * x
    fd = (lambert_w0(x + h).value - lambert_w0(x - h).value) / (2 * h)
    d = lambert_w0_derivative(x)
    assert abs(fd - d) / d <= 1e-7
