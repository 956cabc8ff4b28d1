"""Series-oracle tests: truncated arithmetic, the composita closed form
against direct power extraction, and the generating-function oracles."""

from fractions import Fraction

import pytest

from degenbell.classical import bell_polynomial, stirling2
from degenbell.poly import L, LAM, MPoly, X
from degenbell.series import (
    Series,
    degenerate_exp_composita,
    degenerate_exp_minus_one,
    oracle_degenerate_bell,
    oracle_degenerate_stirling2,
    series_constant,
    series_mul,
    series_pow,
)


def test_inner_series_coefficients():
    f = degenerate_exp_minus_one(3)
    assert f.coefficient(0) == MPoly.zero()
    assert f.coefficient(1) == MPoly.one()
    assert f.coefficient(2) == (1 - LAM) * Fraction(1, 2)
    assert f.coefficient(3) == (1 - 3 * LAM + 2 * LAM**2) * Fraction(1, 6)


def test_series_mul_identity():
    f = degenerate_exp_minus_one(4)
    assert series_mul(f, series_constant(1, 4)) == f


def test_series_mul_truncates():
    t = Series((MPoly.zero(), MPoly.one()))
    product = series_mul(t, t)
    assert product.order == 1
    assert all(c == MPoly.zero() for c in product.coeffs)


def test_series_mul_square_of_inner_series():
    f = degenerate_exp_minus_one(2)
    assert series_mul(f, f).coefficient(2) == MPoly.one()


def test_series_mul_order_mismatch():
    with pytest.raises(ValueError):
        series_mul(degenerate_exp_minus_one(2), degenerate_exp_minus_one(3))


def test_series_pow_cases():
    f = degenerate_exp_minus_one(3)
    assert series_pow(f, 0) == series_constant(1, 3)
    assert series_pow(f, 1) == f
    assert series_pow(f, 2).coefficient(3) == 1 - LAM


def test_series_pow_rejects_negative():
    with pytest.raises(ValueError):
        series_pow(degenerate_exp_minus_one(2), -1)


def test_coefficient_bounds():
    with pytest.raises(ValueError):
        degenerate_exp_minus_one(2).coefficient(3)


# -- composita ----------------------------------------------------------------


def test_composita_hand_values():
    assert degenerate_exp_composita(2, 1) == (1 - LAM) * Fraction(1, 2)
    assert degenerate_exp_composita(3, 2) == 1 - LAM
    for n in range(1, 9):
        assert degenerate_exp_composita(n, n) == MPoly.one()


def test_composita_above_diagonal_is_zero():
    assert degenerate_exp_composita(2, 3) == MPoly.zero()


def test_composita_rejects_bad_arguments():
    with pytest.raises(ValueError):
        degenerate_exp_composita(0, 1)
    with pytest.raises(ValueError):
        degenerate_exp_composita(3, 0)


def test_composita_matches_power_extraction():
    # Closed form against the k-th power of the series itself.
    for n in range(1, 13):
        f = degenerate_exp_minus_one(n)
        for k in range(1, n + 1):
            assert degenerate_exp_composita(n, k) == series_pow(f, k).coefficient(n)


# -- oracles -------------------------------------------------------------------


def test_oracle_bell_small():
    assert oracle_degenerate_bell(0) == MPoly.one()
    assert oracle_degenerate_bell(1) == L * X
    assert oracle_degenerate_bell(2) == L**2 * X**2 + (1 - LAM) * L * X


def test_oracle_bell_rejects_negative():
    with pytest.raises(ValueError):
        oracle_degenerate_bell(-1)


def test_oracle_stirling_small():
    assert oracle_degenerate_stirling2(2, 1) == 1 - LAM
    assert oracle_degenerate_stirling2(3, 1) == 1 - 3 * LAM + 2 * LAM**2
    for n in range(9):
        assert oracle_degenerate_stirling2(n, n) == MPoly.one()


def test_oracle_stirling_rejects_m_above_n():
    with pytest.raises(ValueError):
        oracle_degenerate_stirling2(2, 3)


def test_oracle_stirling_classical_limit():
    for n in range(13):
        for m in range(n + 1):
            at_zero = oracle_degenerate_stirling2(n, m).substitute({"lambda": 0})
            assert at_zero == MPoly.constant(stirling2(n, m))


def test_oracle_bell_classical_limit():
    for n in range(13):
        limit = oracle_degenerate_bell(n).substitute({"lambda": 0, "L": 1})
        assert limit == bell_polynomial(n)


def test_oracle_bell_leading_term():
    for n in range(1, 13):
        p = oracle_degenerate_bell(n)
        assert p.degree_in("x") == n
        assert p.coefficient((0, n, n, 0)) == 1
        # nothing of x-degree n besides L^n x^n
        assert all(exps[2] < n or exps == (0, n, n, 0) for exps, _ in p.items())
