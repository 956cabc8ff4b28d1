"""Classical integer combinatorics: binomials, both kinds of Stirling
numbers, Bell polynomials, and the lambda-step falling factorial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import math

from .poly import LAM, MPoly, Scalar

# Triangular caches, grown on demand.  Row n holds entries for k = 0..n.
# Construction is single-writer (append only); reads are safe to share.
_S1_ROWS: list[list[int]] = [[1]]
_S2_ROWS: list[list[int]] = [[1]]


def binomial(n: int, k: int) -> int:
    """n choose k, with 0 outside the triangle (k < 0 or k > n)."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _extend_first(n: int) -> None:
    while len(_S1_ROWS) <= n:
        m = len(_S1_ROWS)
        prev = _S1_ROWS[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            # (x)_m = (x - (m-1)) (x)_{m-1}
            row[k] = prev[k - 1] - (m - 1) * (prev[k] if k < m else 0)
        _S1_ROWS.append(row)


def _extend_second(n: int) -> None:
    while len(_S2_ROWS) <= n:
        m = len(_S2_ROWS)
        prev = _S2_ROWS[-1]
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            row[k] = prev[k - 1] + k * (prev[k] if k < m else 0)
        _S2_ROWS.append(row)


def _check_pair(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"Stirling numbers need n, k >= 0, got n={n}, k={k}")
    if k > n:
        raise ValueError(f"Stirling numbers need k <= n, got n={n}, k={k}")


def stirling1(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: coefficient of z^k in
    the falling factorial z(z-1)...(z-n+1)."""
    _check_pair(n, k)
    _extend_first(n)
    return _S1_ROWS[n][k]


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind: k-block set partitions of an n-set."""
    _check_pair(n, k)
    _extend_second(n)
    return _S2_ROWS[n][k]


@dataclass(frozen=True)
class StirlingTable:
    """Immutable triangular table of Stirling numbers, entry (n, k) for k <= n."""

    kind: str  # "first" (signed) or "second"
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, kind: str, n_max: int) -> "StirlingTable":
        if kind not in ("first", "second"):
            raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
        if n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {n_max}")
        entry = stirling1 if kind == "first" else stirling2
        rows = tuple(tuple(entry(n, k) for k in range(n + 1)) for n in range(n_max + 1))
        return cls(kind, rows)

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> int:
        _check_pair(n, k)
        return self.rows[n][k]


def bell_polynomial(n: int) -> MPoly:
    """The exponential polynomial: sum of stirling2(n, k) * x^k over k."""
    if n < 0:
        raise ValueError(f"bell_polynomial needs n >= 0, got {n}")
    return MPoly.from_terms(
        ((0, 0, k, 0), Fraction(stirling2(n, k))) for k in range(n + 1)
    )


def falling_factorial_general(z: MPoly | Scalar, n: int) -> MPoly:
    """The lambda-step falling factorial z (z - lambda) ... (z - (n-1) lambda).

    n = 0 gives the empty product 1.  The step is the formal variable
    lambda, so with z an integer the result is a polynomial in lambda.
    """
    if n < 0:
        raise ValueError(f"falling factorial needs n >= 0, got {n}")
    base = z if isinstance(z, MPoly) else MPoly.constant(z)
    out = MPoly.one()
    for i in range(n):
        out = out * (base - i * LAM)
    return out


__all__ = [
    "StirlingTable",
    "bell_polynomial",
    "binomial",
    "falling_factorial_general",
    "stirling1",
    "stirling2",
]
