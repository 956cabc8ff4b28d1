"""Truncated power series in t with polynomial coefficients.

These series are the brute-force oracle: every closed form elsewhere in
the package is checked against coefficients extracted here by expanding
the defining generating functions directly.

A series stores ordinary coefficients: the entry at index n is the plain
coefficient of t^n.  Exponentially normalized quantities are produced at
the boundary by multiplying the n-th coefficient by n!.  Keeping a single
stored form with explicit conversion is what prevents a silent factor of
n! from creeping into the composita arithmetic, which lives on ordinary
coefficients while Bell-style values are exponential.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .poly import L, MPoly, Scalar, X
from .classical import binomial, falling_factorial_general


@dataclass(frozen=True)
class Series:
    """Truncated series sum(coeffs[n] * t^n for n = 0..order).

    Arithmetic is truncation closed: nothing beyond the stored order is
    ever read or written.
    """

    coeffs: tuple[MPoly, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> MPoly:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside truncation order {self.order}")
        return self.coeffs[n]


def series_constant(value: MPoly | Scalar, order: int) -> Series:
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    head = value if isinstance(value, MPoly) else MPoly.constant(value)
    return Series((head,) + (MPoly.zero(),) * order)


def series_add(a: Series, b: Series) -> Series:
    if a.order != b.order:
        raise ValueError(f"series order mismatch: {a.order} != {b.order}")
    return Series(tuple(ca + cb for ca, cb in zip(a.coeffs, b.coeffs)))


def series_scale(a: Series, factor: MPoly | Scalar) -> Series:
    poly = factor if isinstance(factor, MPoly) else MPoly.constant(factor)
    return Series(tuple(c * poly for c in a.coeffs))


def series_mul(a: Series, b: Series) -> Series:
    """Truncated Cauchy product of two series of equal order."""
    if a.order != b.order:
        raise ValueError(f"series order mismatch: {a.order} != {b.order}")
    coeffs = []
    for n in range(a.order + 1):
        acc = MPoly.zero()
        for i in range(n + 1):
            if a.coeffs[i] and b.coeffs[n - i]:
                acc = acc + a.coeffs[i] * b.coeffs[n - i]
        coeffs.append(acc)
    return Series(tuple(coeffs))


def series_pow(a: Series, k: int) -> Series:
    """k-fold truncated product; k = 0 gives the constant-1 series."""
    if k < 0:
        raise ValueError(f"series power must be >= 0, got {k}")
    out = series_constant(1, a.order)
    for _ in range(k):
        out = series_mul(out, a)
    return out


def degenerate_exp_minus_one(order: int) -> Series:
    """The series of (1 + lambda t)^(1/lambda) - 1.

    Its exponential coefficients are the lambda-step falling factorials of
    1, so the stored ordinary coefficient of t^n is (1 | lambda)_n / n!.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    coeffs = [MPoly.zero()]
    for n in range(1, order + 1):
        coeffs.append(falling_factorial_general(1, n) * Fraction(1, factorial(n)))
    return Series(tuple(coeffs))


def degenerate_exp_composita(n: int, k: int) -> MPoly:
    """Coefficient of t^n in the k-th power of (1 + lambda t)^(1/lambda) - 1.

    Computed by the alternating binomial closed form over the lambda-step
    falling factorials (j | lambda)_n; k > n gives 0 because the series
    has no constant term.
    """
    if n < 1 or k < 1:
        raise ValueError(f"composita needs n >= 1 and k >= 1, got n={n}, k={k}")
    if k > n:
        return MPoly.zero()
    acc = MPoly.zero()
    for j in range(1, k + 1):
        sign = -1 if (k - j) % 2 else 1
        acc = acc + sign * binomial(k, j) * falling_factorial_general(j, n)
    return acc * Fraction(1, factorial(n))


def oracle_degenerate_bell(n: int) -> MPoly:
    """Degenerate Bell polynomial straight from its generating function.

    Expands exp(x L f(t)) with f(t) = (1 + lambda t)^(1/lambda) - 1 as the
    finite sum of (x L)^m f(t)^m / m! at truncation order n, then converts
    the ordinary coefficient of t^n to exponential form by multiplying by
    n!.  The result is a polynomial in lambda, L and x.
    """
    if n < 0:
        raise ValueError(f"oracle needs n >= 0, got {n}")
    f = degenerate_exp_minus_one(n)
    scaled = series_scale(f, X * L)
    total = series_constant(0, n)
    power = series_constant(1, n)
    for m in range(n + 1):
        total = series_add(total, series_scale(power, Fraction(1, factorial(m))))
        if m < n:
            power = series_mul(power, scaled)
    return total.coefficient(n) * factorial(n)


def oracle_degenerate_stirling2(n: int, m: int) -> MPoly:
    """Degenerate Stirling number of the second kind from its generating
    function: (n!/m!) times the coefficient of t^n in f(t)^m."""
    if m < 0 or n < 0 or m > n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    f = degenerate_exp_minus_one(n)
    coefficient = series_pow(f, m).coefficient(n)
    return coefficient * Fraction(factorial(n), factorial(m))


__all__ = [
    "Series",
    "degenerate_exp_composita",
    "degenerate_exp_minus_one",
    "oracle_degenerate_bell",
    "oracle_degenerate_stirling2",
    "series_add",
    "series_constant",
    "series_mul",
    "series_pow",
    "series_scale",
]
