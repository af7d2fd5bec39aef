import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import ulp_diff
from invnorm.gauss import normal_cdf, probit_reference
from invnorm.series import (
    EvalConfig,
    SeriesDomainError,
    hybrid_newton_steps,
    probit_hybrid,
    s_series,
    taylor_terms,
)

SQRT_2PI_ROUNDED = 2.5066282746310007  # correctly rounded sqrt(2 pi)


def test_taylor_terms_examples():
    t = taylor_terms(2).terms
    assert abs(t[0] - 2.5066282746310002) <= 2 * np.spacing(t[0])
    assert t[0] == SQRT_2PI_ROUNDED
    # (2 pi)^(3/2) / 3! and 7 (2 pi)^(5/2) / 5!, correctly rounded
    with mpmath.workdps(40):
        assert t[1] == float((2 * mpmath.pi) ** 1.5 / 6) == 2.6249349909537365
        assert t[2] == float(7 * (2 * mpmath.pi) ** 2.5 / 120) == 5.772533538611735


def test_taylor_terms_are_correctly_rounded():
    from invnorm.polys import series_coeff_c

    c = series_coeff_c(81)
    with mpmath.workdps(60):
        for k, t in enumerate(taylor_terms(40).terms):
            n = 2 * k + 1
            assert t == float(c[n] * (2 * mpmath.pi) ** (mpmath.mpf(n) / 2) / mpmath.factorial(n))


def test_series_examples():
    assert s_series(0.5).value == 0.0
    assert s_series(0.6).value == pytest.approx(0.2533471031357997, abs=1e-13)


@given(st.floats(0.5, 0.79))
def test_series_is_odd(x):
    y = 1.0 - x  # exact for x >= 1/2
    assert s_series(y).value == -s_series(x).value


def test_series_accuracy():
    u = np.linspace(-0.25, 0.25, 101)
    cfg = EvalConfig(term_cap=61)
    got = np.array([s_series(0.5 + v, cfg).value for v in u])
    ref = probit_reference(0.5 + u).value
    assert np.max(np.abs(got - ref)) <= 1e-12


def test_series_reports_truncation():
    r = s_series(0.75)
    assert r.terms_used > 10
    assert r.last_term < 1e-16 * abs(r.value) * 10


def test_series_term_decay():
    a = taylor_terms(119).terms
    u = 0.3
    mags = [a[k] * u ** (2 * k + 1) for k in range(120)]
    assert all(b < c for b, c in zip(mags[5:], mags[4:]))


def test_series_domain():
    with pytest.raises(SeriesDomainError):
        s_series(0.85)


def test_eval_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(switch_radius=0.5)
    with pytest.raises(ValueError):
        EvalConfig(term_cap=0)


def test_hybrid_examples():
    assert probit_hybrid(0.5) == 0.0
    assert probit_hybrid(0.975) == pytest.approx(1.9599639845400545, abs=1e-12)
    ref = probit_reference(1e-10).value
    assert probit_hybrid(1e-10) == pytest.approx(ref, rel=1e-11)


def test_hybrid_matches_reference():
    p = np.linspace(0, 1, 10001)[1:-1]
    h = probit_hybrid(p)
    ref = probit_reference(p).value
    assert np.max(np.abs(h - ref) / (1 + np.abs(ref))) <= 1e-12


def test_hybrid_round_trip():
    tail = np.logspace(-12, -3, 200)
    p = np.concatenate([np.linspace(0, 1, 10001)[1:-1], tail, 1 - tail])
    err = np.abs(normal_cdf(probit_hybrid(p)) - p) / np.maximum(np.maximum(p, 1 - p), 1e-2)
    assert np.max(err) <= 1e-13


def test_hybrid_oddness():
    grid = np.linspace(0.001, 0.999, 9999)
    hi = np.unique(np.where(grid >= 0.5, grid, 1 - grid))
    assert ulp_diff(probit_hybrid(1 - hi), -probit_hybrid(hi)) <= 1


def test_hybrid_newton_budget():
    p = np.concatenate([np.logspace(-300, -1, 300), np.linspace(0.01, 0.2, 50)])
    steps = hybrid_newton_steps(p)
    assert steps.max() <= 3
    assert hybrid_newton_steps(0.5) == 0
    assert hybrid_newton_steps(0.01) >= 1


def test_hybrid_scalar_and_array_agree():
    p = np.array([1e-7, 0.3, 0.9])
    assert [probit_hybrid(v) for v in p] == list(probit_hybrid(p))
    assert isinstance(probit_hybrid(0.3), float)
