"""Floating-point evaluation and truncated validation of the
infinite-series (Dobinski-type) identities.

All series are summed with math.fsum, which is exact over the generated
term list, so the 1e-9 default tolerance is reachable in double precision
across the whole supported grid.  lambda = 0 is a removable singularity of
L = log(1+lambda)/lambda and is rejected everywhere here; callers wanting
the classical limit use the exact classical constructors instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import MPoly
from .classical import bell_polynomial, stirling1
from .degenerate import dbell_via_stirling_pair, degenerate_bell

DEFAULT_TERMS = 80
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class NumericCheck:
    """One floating-point comparison: passed is abs_error <= tol.

    `lam` and `x` are None for purely classical checks.
    """

    identity_name: str
    n: int
    lam: float | None
    x: float | None
    terms: int
    lhs: float
    rhs: float
    abs_error: float
    tol: float
    passed: bool

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity_name,
            "n": self.n,
            "lambda": self.lam,
            "x": self.x,
            "terms": self.terms,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_error": self.abs_error,
            "tol": self.tol,
            "passed": self.passed,
        }

    def to_csv_row(self) -> list:
        return [
            self.identity_name,
            self.n,
            "" if self.lam is None else repr(self.lam),
            "" if self.x is None else repr(self.x),
            self.terms,
            repr(self.lhs),
            repr(self.rhs),
            repr(self.abs_error),
            self.passed,
        ]


def _make_check(
    identity: str,
    n: int,
    lam: float | None,
    x: float | None,
    terms: int,
    lhs: float,
    rhs: float,
    tol: float,
) -> NumericCheck:
    abs_error = abs(lhs - rhs)
    return NumericCheck(identity, n, lam, x, terms, lhs, rhs, abs_error, tol, abs_error <= tol)


def _check_lambda(lam: float) -> float:
    """Validate lambda and return L = log(1+lambda)/lambda."""
    if not lam > -1.0 or lam == 0.0:
        raise ValueError(f"lambda must lie in (-1, 0) or (0, inf), got {lam}")
    return math.log1p(lam) / lam


def _poly_float(p: MPoly, lam: float, big_l: float, x: float, y: float = 0.0) -> float:
    """Evaluate an exact polynomial at a float point (coefficients
    converted at this boundary only)."""
    point = (lam, big_l, x, y)
    return math.fsum(
        float(coeff) * math.prod(v**e for v, e in zip(point, exps) if e)
        for exps, coeff in p.items()
    )


def _falling_float(z: float, lam: float, n: int) -> float:
    out = 1.0
    for i in range(n):
        out *= z - i * lam
    return out


def eval_bel_numeric(n: int, lam: float, x: float) -> float:
    """Closed-form degenerate Bell value at real lambda and x.

    lambda and x are bound exactly (every float is a rational), reducing
    the polynomial to exact coefficients per power of L; only the single
    transcendental L = log1p(lambda)/lambda is bound in floating point.
    This keeps the large cancellations among the lambda terms exact, so
    the result carries only the rounding of one Horner pass.
    """
    big_l = _check_lambda(lam)
    reduced = degenerate_bell(n).substitute({"lambda": Fraction(lam), "x": Fraction(x), "y": 0})
    by_power = {exps[1]: coeff for exps, coeff in reduced.items()}
    value = 0.0
    for power in range(max(by_power, default=0), -1, -1):
        value = value * big_l + float(by_power.get(power, 0))
    return value


def dobinski_degenerate(n: int, lam: float, x: float, terms: int = DEFAULT_TERMS) -> float:
    """Truncated Dobinski-type series for the degenerate Bell value:
    exp(-x L) * sum over l of (x^l / l!) L^l (l | lambda)_n.

    Converges to eval_bel_numeric(n, lam, x) as terms grows.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    big_l = _check_lambda(lam)
    weight = 1.0  # (x L)^l / l!
    partials = []
    for l in range(terms + 1):
        if l:
            weight *= x * big_l / l
        partials.append(weight * _falling_float(float(l), lam, n))
    return math.exp(-x * big_l) * math.fsum(partials)


def dobinski_classical(n: int, terms: int = 60) -> float:
    """Truncated classical Dobinski sum (1/e) * sum of k^n / k!."""
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    inv_fact = 1.0
    partials = []
    for k in range(terms + 1):
        if k:
            inv_fact /= k
        partials.append(float(k) ** n * inv_fact)
    return math.exp(-1.0) * math.fsum(partials)


def dobinski_check(
    n: int, lam: float, x: float, terms: int = DEFAULT_TERMS, tol: float = DEFAULT_TOL
) -> NumericCheck:
    """Closed form against the truncated degenerate Dobinski series."""
    lhs = eval_bel_numeric(n, lam, x)
    rhs = dobinski_degenerate(n, lam, x, terms)
    return _make_check("dobinski_degenerate", n, lam, x, terms, lhs, rhs, tol)


def classical_dobinski_check(n: int, terms: int = 60, tol: float = DEFAULT_TOL) -> NumericCheck:
    """Truncated classical Dobinski sum against the exact Bell number."""
    exact = bell_polynomial(n).eval_exact({"lambda": 0, "L": 1, "x": 1, "y": 0})
    return _make_check(
        "dobinski_classical", n, None, None, terms, dobinski_classical(n, terms), float(exact), tol
    )


def scaled_bell_series_check(
    n: int, lam: float, x: float, terms: int = DEFAULT_TERMS, tol: float = DEFAULT_TOL
) -> NumericCheck:
    """Two-sided series identity for the exponentially scaled Bell value.

    Left side: exp(x L) times the double-Stirling closed form, evaluated
    in floats.  Right side: the truncated series sum over k of
    (x^k / k!) L^k * sum over l of k^l lambda^(n-l) stirling1(n, l),
    with the inner sum evaluated exactly as written.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    big_l = _check_lambda(lam)
    lhs = math.exp(x * big_l) * _poly_float(dbell_via_stirling_pair(n), lam, big_l, x)
    weight = 1.0  # (x L)^k / k!
    partials = []
    for k in range(terms + 1):
        if k:
            weight *= x * big_l / k
        inner = math.fsum(
            float(k) ** l * lam ** (n - l) * stirling1(n, l) for l in range(n + 1)
        )
        partials.append(weight * inner)
    rhs = math.fsum(partials)
    return _make_check("scaled_bell_series", n, lam, x, terms, lhs, rhs, tol)


def limit_sweep(
    n: int, x: float, lambdas: list[float], tol_scale: float = 100.0
) -> list[NumericCheck]:
    """Compare the degenerate value against the classical Bell polynomial
    for each lambda; the deviation is first order in lambda, so each point
    gets the tolerance tol_scale * |lambda|.

    The default scale suits small n and x near 1; sweeps at larger
    arguments should pass a scale matched to their derivative size.
    """
    classical = bell_polynomial(n)
    target = math.fsum(float(coeff) * x ** exps[2] for exps, coeff in classical.items())
    checks = []
    for lam in lambdas:
        value = eval_bel_numeric(n, lam, x)
        checks.append(
            _make_check(
                "classical_limit_sweep", n, lam, x, 0, value, target, tol_scale * abs(lam)
            )
        )
    return checks


__all__ = [
    "DEFAULT_TERMS",
    "DEFAULT_TOL",
    "NumericCheck",
    "classical_dobinski_check",
    "dobinski_check",
    "dobinski_classical",
    "dobinski_degenerate",
    "eval_bel_numeric",
    "limit_sweep",
    "scaled_bell_series_check",
]
