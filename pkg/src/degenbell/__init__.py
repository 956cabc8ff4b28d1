"""Exact and numeric machinery for degenerate Bell polynomials.

The package constructs the degenerate Bell polynomials and degenerate
Stirling numbers of the second kind by several independent closed forms,
proves the forms pairwise equal as canonical polynomials in
Q[lambda, L, x, y] (with L a formal stand-in for log(1+lambda)/lambda),
and validates the infinite-series identities numerically.
"""

from .poly import L, LAM, MPoly, Rational, X, Y
from .classical import (
    StirlingTable,
    bell_polynomial,
    binomial,
    falling_factorial_general,
    stirling1,
    stirling2,
)
from .series import (
    Series,
    degenerate_exp_composita,
    degenerate_exp_minus_one,
    oracle_degenerate_bell,
    oracle_degenerate_stirling2,
    series_mul,
    series_pow,
)
from .degenerate import (
    VerificationReport,
    composition_coefficient,
    dbell_via_classical_bell,
    dbell_via_composita,
    dbell_via_recurrence,
    dbell_via_stirling_pair,
    degenerate_bell,
    degenerate_stirling2,
    limit_lambda_zero,
    verify_addition,
    verify_derivative,
)
from .numeric import (
    NumericCheck,
    classical_dobinski_check,
    dobinski_check,
    dobinski_classical,
    dobinski_degenerate,
    eval_bel_numeric,
    limit_sweep,
    scaled_bell_series_check,
)
from .suite import SuiteResult, run_full_suite

__all__ = [
    "L",
    "LAM",
    "MPoly",
    "NumericCheck",
    "Rational",
    "Series",
    "StirlingTable",
    "SuiteResult",
    "VerificationReport",
    "X",
    "Y",
    "bell_polynomial",
    "binomial",
    "classical_dobinski_check",
    "composition_coefficient",
    "dbell_via_classical_bell",
    "dbell_via_composita",
    "dbell_via_recurrence",
    "dbell_via_stirling_pair",
    "degenerate_bell",
    "degenerate_exp_composita",
    "degenerate_exp_minus_one",
    "degenerate_stirling2",
    "dobinski_check",
    "dobinski_classical",
    "dobinski_degenerate",
    "eval_bel_numeric",
    "falling_factorial_general",
    "limit_lambda_zero",
    "limit_sweep",
    "oracle_degenerate_bell",
    "oracle_degenerate_stirling2",
    "run_full_suite",
    "scaled_bell_series_check",
    "series_mul",
    "series_pow",
    "stirling1",
    "stirling2",
    "verify_addition",
    "verify_derivative",
]
