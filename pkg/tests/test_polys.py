import math

import pytest
from hypothesis import given, strategies as st

from invnorm.polys import (
    CoeffTable,
    IntPolynomial,
    c_via_derivative_recurrence,
    coeffs_via_matrices,
    poly_eval,
    poly_next,
    poly_next_triple_sum,
    poly_sequence,
    series_coeff_c,
    transfer_matrix,
)
from invnorm.verify import load_c_table, load_p_table

P = IntPolynomial


def test_intpolynomial_strips_trailing_zeros():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).degree == -1
    assert P([5]).degree == 0


def test_poly_next_examples():
    assert poly_next(P([1]), 1) == P([0, 1])
    assert poly_next(P([0, 1]), 2) == P([1, 0, 2])
    p9 = poly_sequence(9)[9]
    assert poly_next(p9, 10) == P([243649, 0, 8678422, 0, 40258860, 0, 54580248, 0, 25659360, 0, 3628800])


def test_poly_next_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        poly_next(P([1, 0, 2]), 5)


def test_poly_sequence_examples():
    assert poly_sequence(0) == [P([1])]
    assert poly_sequence(3) == [P([1]), P([0, 1]), P([1, 0, 2]), P([0, 7, 0, 6])]
    assert poly_sequence(8)[8] == P([4369, 0, 102164, 0, 290292, 0, 212976, 0, 40320])


def test_transfer_matrix_shapes():
    assert transfer_matrix(1) == ((0,), (1,))
    assert transfer_matrix(2) == ((0, 1), (2, 0), (0, 2))
    assert transfer_matrix(3) == ((0, 1, 0), (3, 0, 2), (0, 3, 0), (0, 0, 3))


@pytest.mark.parametrize("n", range(1, 9))
def test_transfer_matrix_index_rule(n):
    a = transfer_matrix(n)
    assert len(a) == n + 1 and all(len(r) == n for r in a)
    for i in range(1, n + 2):
        for j in range(1, n + 1):
            want = i if j == i + 1 else n if j == i - 1 else 0
            assert a[i - 1][j - 1] == want


def test_transfer_matrix_domain():
    with pytest.raises(ValueError):
        transfer_matrix(0)


def test_coeffs_via_matrices_examples():
    assert coeffs_via_matrices(1) == [0, 1]
    assert coeffs_via_matrices(2) == [1, 0, 2]
    assert coeffs_via_matrices(3) == [0, 7, 0, 6]


def test_triple_sum_examples():
    seq = poly_sequence(5)
    assert poly_next_triple_sum(seq[:1]) == P([0, 1])
    assert poly_next_triple_sum(seq[:2]) == P([1, 0, 2])
    assert poly_next_triple_sum(seq[:5]) == P([0, 127, 0, 326, 0, 120])


def test_routes_agree_through_25():
    seq = poly_sequence(25)
    for n in range(26):
        assert list(seq[n].coeffs) == coeffs_via_matrices(n)
        if n:
            assert poly_next_triple_sum(seq[:n]) == seq[n]


def test_structure_through_25():
    seq = poly_sequence(25)
    for n in range(1, 26):
        p, q = seq[n], seq[n - 1]
        assert p.degree == n
        assert p[n] == math.factorial(n)
        for k in range(n + 1):
            if (k - n) % 2:
                assert p[k] == 0
            # coefficient recurrence read off from P_n = P'_{n-1} + n x P_{n-1}
            assert p[k] == n * q[k - 1] + (k + 1) * q[k + 1]


def test_c_examples():
    c = series_coeff_c(41)
    assert [c[1], c[3], c[5], c[7]] == [1, 1, 7, 127]
    assert c[9] == 4369 and c[11] == 243649
    assert c[41] == 53789884101606550209324949796685518122943569
    d = c_via_derivative_recurrence(5)
    assert d[2] == 0 and d[3] == 1 and d[5] == 7


def test_c_routes_agree_and_evens_vanish():
    a = series_coeff_c(41)
    b = c_via_derivative_recurrence(41)
    assert a == b
    for n in range(1, 42):
        assert a[n] == b[n]
        if n % 2 == 0:
            assert a[n] == 0


def test_golden_tables():
    c = series_coeff_c(41)
    assert dict(c.odd_items()) == load_c_table()
    assert len(load_c_table()) == 21
    seq = poly_sequence(10)
    for n, coeffs in load_p_table().items():
        assert list(seq[n].coeffs) == coeffs


def test_coeff_table_is_a_mapping():
    c = series_coeff_c(7)
    assert isinstance(c, CoeffTable)
    assert len(c) == 7 and list(c) == list(range(1, 8))
    with pytest.raises(KeyError):
        c[8]


def test_poly_eval_examples():
    seq = poly_sequence(3)
    assert poly_eval(seq[2], 0.0) == 1.0
    assert poly_eval(seq[1], 3.5) == 3.5
    assert poly_eval(seq[3], 1.0) == 13.0


@given(st.integers(-50, 50), st.integers(0, 12))
def test_poly_eval_matches_exact_integer_evaluation(x, n):
    p = poly_sequence(12)[n]
    exact = sum(c * x**k for k, c in enumerate(p.coeffs))
    assert poly_eval(p, float(x)) == pytest.approx(float(exact), rel=1e-14)
    assert p(x) == exact
    assert isinstance(p(x), int)


@given(st.lists(st.integers(-9, 9), max_size=6), st.lists(st.integers(-9, 9), max_size=6), st.integers(-5, 5))
def test_polynomial_ring_laws(a, b, x):
    pa, pb = P(a), P(b)
    assert (pa * pb)(x) == pa(x) * pb(x)
    assert (pa + pb)(x) == pa(x) + pb(x)
    # product rule
    assert (pa * pb).derivative() == pa.derivative() * pb + pa * pb.derivative()


def test_module_doctests():
    import doctest

    import invnorm.gauss
    import invnorm.lambertw
    import invnorm.series

    for mod in (invnorm.gauss, invnorm.lambertw, invnorm.series):
        assert doctest.testmod(mod).failed == 0
