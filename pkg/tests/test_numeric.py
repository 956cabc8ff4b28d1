"""Floating-point checks: closed-form evaluation, the truncated
Dobinski-type series, the scaled two-sided series identity, and the
lambda -> 0 sweep."""

import math
from fractions import Fraction

import pytest

from degenbell.degenerate import degenerate_bell
from degenbell.numeric import (
    NumericCheck,
    classical_dobinski_check,
    dobinski_check,
    dobinski_classical,
    dobinski_degenerate,
    eval_bel_numeric,
    limit_sweep,
    scaled_bell_series_check,
)

GRID_LAMBDAS = (0.1, 0.5, 1.0)
GRID_XS = (0.5, 1.0, 2.0)


# -- closed-form evaluation -----------------------------------------------------


def test_eval_degree_one():
    assert eval_bel_numeric(1, 0.5, 1.0) == pytest.approx(math.log(1.5) / 0.5, abs=1e-12)


def test_eval_degree_zero_is_one():
    for lam in (0.25, 0.7, 3.0, -0.5):
        assert eval_bel_numeric(0, lam, 3.2) == 1.0


def test_eval_degree_two():
    big_l = math.log(1.5) / 0.5
    expected = big_l**2 + 0.5 * big_l
    assert eval_bel_numeric(2, 0.5, 1.0) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("lam", [0.0, -1.0, -1.5])
def test_eval_rejects_bad_lambda(lam):
    with pytest.raises(ValueError):
        eval_bel_numeric(2, lam, 1.0)


def test_eval_matches_exact_value_through_L():
    # Reference: substitute lambda = 1/2, x = 1 exactly, reducing to a
    # univariate polynomial in L, then bind the float L once.
    big_l = math.log1p(0.5) / 0.5
    for n in range(9):
        reduced = degenerate_bell(n).substitute({"lambda": Fraction(1, 2), "x": 1, "y": 0})
        reference = math.fsum(float(c) * big_l ** e[1] for e, c in reduced.items())
        value = eval_bel_numeric(n, 0.5, 1.0)
        assert value == pytest.approx(reference, rel=1e-12, abs=1e-12)


# -- degenerate Dobinski series ----------------------------------------------------


def test_dobinski_degree_zero_telescopes():
    assert dobinski_degenerate(0, 0.5, 1.0, 80) == pytest.approx(1.0, abs=1e-9)


def test_dobinski_agrees_with_closed_form():
    assert dobinski_degenerate(2, 0.5, 1.0, 80) == pytest.approx(
        eval_bel_numeric(2, 0.5, 1.0), abs=1e-9
    )
    assert dobinski_degenerate(8, 0.1, 2.0, 80) == pytest.approx(
        eval_bel_numeric(8, 0.1, 2.0), abs=1e-9
    )


def test_dobinski_rejects_bad_arguments():
    with pytest.raises(ValueError):
        dobinski_degenerate(2, 0.0, 1.0, 80)
    with pytest.raises(ValueError):
        dobinski_degenerate(2, 0.5, 1.0, 0)
    with pytest.raises(ValueError):
        dobinski_degenerate(-1, 0.5, 1.0, 80)


def test_dobinski_truncation_error_shrinks():
    # More terms never hurt, at every grid point.  Once the truncation
    # error sinks below the rounding floor the compared sums can differ in
    # their final ulp, so monotonicity is asserted up to that floor.
    for n in range(9):
        for lam in GRID_LAMBDAS:
            for x in GRID_XS:
                closed = eval_bel_numeric(n, lam, x)
                slack = 4 * math.ulp(max(1.0, abs(closed)))
                errors = [abs(dobinski_degenerate(n, lam, x, t) - closed) for t in (20, 40, 80)]
                assert errors[2] <= errors[1] + slack
                assert errors[1] <= errors[0] + slack


def test_dobinski_check_record():
    check = dobinski_check(3, 0.5, 1.0)
    assert check.passed
    assert check.passed == (check.abs_error <= check.tol)
    assert check.identity_name == "dobinski_degenerate"


# -- classical Dobinski --------------------------------------------------------------


def test_classical_dobinski_bell_numbers():
    for n, bell in enumerate([1, 1, 2, 5, 15, 52]):
        assert dobinski_classical(n, 60) == pytest.approx(bell, abs=1e-9)


def test_classical_dobinski_check_record():
    check = classical_dobinski_check(4, 60)
    assert check.passed
    assert check.lam is None and check.x is None
    assert check.rhs == 15.0


# -- scaled two-sided series -----------------------------------------------------------


def test_scaled_series_degree_zero():
    check = scaled_bell_series_check(0, 0.5, 1.0, 80, 1e-9)
    assert check.abs_error < 1e-12
    assert check.passed


def test_scaled_series_grid_points():
    assert scaled_bell_series_check(2, 0.5, 1.0, 80, 1e-9).passed
    assert scaled_bell_series_check(6, 1.0, 0.5, 80, 1e-9).passed


def test_scaled_series_rejects_bad_lambda():
    with pytest.raises(ValueError):
        scaled_bell_series_check(2, -1.0, 1.0)


# -- limit sweep -------------------------------------------------------------------------


def test_limit_sweep_close_to_classical():
    (check,) = limit_sweep(3, 1.0, [1e-6])
    assert abs(check.lhs - 5.0) < 1e-4
    assert check.passed


def test_limit_sweep_degree_zero_exact():
    for check in limit_sweep(0, 1.0, [1e-2, 0.5, 2.0]):
        assert check.abs_error == 0.0


def test_limit_sweep_strictly_decreasing():
    checks = limit_sweep(4, 1.0, [1e-2, 1e-4, 1e-6])
    errors = [c.abs_error for c in checks]
    assert errors[0] > errors[1] > errors[2]
    assert checks[-1].rhs == 15.0


def test_numeric_check_passed_invariant():
    check = NumericCheck("demo", 1, 0.5, 1.0, 10, 1.0, 1.5, 0.5, 0.1, False)
    assert check.passed == (check.abs_error <= check.tol)
    row = check.to_csv_row()
    assert row[0] == "demo"
    assert len(row) == 9
