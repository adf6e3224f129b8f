"""Exact count tables and the closed-form asymptotic estimate.

Three sequences are tabulated with arbitrary-precision integers:

* u_tilde(n): pairs of partitions of n into distinct parts, read off the
  series product of (1 + q^j)^2 over j >= 1.
* v(n): valley-free positive sequences of weight n.  Splitting at the
  peak maps each pair of distinct-part partitions to such a sequence;
  strict-peak sequences are hit twice and equal-peak sequences once, so
  v(n) = (u_tilde(n) + t2(n)) / 2 with t2 counting the equal-peak kind.
* c(n): binary words of length n avoiding x x^R x.  Each valley-free
  sequence of weight n is the profile of exactly one such word per start
  letter, so c(n) = 2 v(n) for n >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "AsymptoticEstimate",
    "CountTable",
    "asymptotic_u_tilde",
    "count_c",
    "count_v",
    "gf_u_tilde",
    "type2_counts",
    "verify_bounds",
]

COLUMN_ALIASES = {"u": "u_tilde", "u_tilde": "u_tilde", "v": "v", "c": "c"}


def gf_u_tilde(limit: int) -> list[int]:
    """Coefficients 0..limit of the product of (1 + q^j)^2 for j >= 1.

    Factors with j > limit cannot touch the kept coefficients, so the
    product is truncated there.
    """
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    coeffs = [0] * (limit + 1)
    coeffs[0] = 1
    for j in range(1, limit + 1):
        for _ in range(2):
            # multiply by (1 + q^j) in place; descending so each factor
            # is used at most once
            for m in range(limit, j - 1, -1):
                coeffs[m] += coeffs[m - j]
    return coeffs


def type2_counts(limit: int) -> list[int]:
    """Coefficients 0..limit counting equal-peak valley-free sequences.

    A weight-n sequence whose two maxima equal p is a pair of strictly
    increasing runs below p on either side, giving the series sum over
    p >= 1 of q^(2p) times the product of (1 + q^j)^2 for j < p.
    """
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    out = [0] * (limit + 1)
    # partial = product over j < p, grown as p advances
    partial = [0] * (limit + 1)
    partial[0] = 1
    for p in range(1, limit // 2 + 1):
        for m in range(limit - 2 * p + 1):
            out[2 * p + m] += partial[m]
        for _ in range(2):
            for m in range(limit, p - 1, -1):
                partial[m] += partial[m - p]
    return out


def count_v(limit: int) -> list[int]:
    """Exact counts of valley-free positive sequences by weight 0..limit."""
    return list(CountTable.build(limit).v)


def count_c(limit: int) -> list[int]:
    """Exact counts of words avoiding x x^R x by length 0..limit."""
    return list(CountTable.build(limit).c)


@dataclass(frozen=True)
class CountTable:
    """Immutable columns u_tilde, v, c over indices 0..limit."""

    limit: int
    u_tilde: tuple[int, ...]
    v: tuple[int, ...]
    c: tuple[int, ...]

    @classmethod
    def build(cls, limit: int) -> CountTable:
        u = gf_u_tilde(limit)
        t2 = type2_counts(limit)
        v = [1]
        for n in range(1, limit + 1):
            total = u[n] + t2[n]
            if total % 2:
                raise RuntimeError(
                    f"double-counting parity broken at weight {n}: {u[n]} + {t2[n]} is odd"
                )
            v.append(total // 2)
        c = [1] + [2 * vn for vn in v[1:]]
        return cls(limit, tuple(u), tuple(v), tuple(c))

    def column(self, name: str) -> tuple[int, ...]:
        try:
            return getattr(self, COLUMN_ALIASES[name])
        except KeyError:
            raise ValueError(f"unknown column {name!r}; expected one of u, v, c") from None

    def to_csv(self) -> str:
        lines = ["n,u_tilde,v,c"]
        lines.extend(
            f"{n},{self.u_tilde[n]},{self.v[n]},{self.c[n]}" for n in range(self.limit + 1)
        )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Closed-form estimate of u_tilde(n), first correction term included.

    The next correction of order 1/n is dropped; relative_error_vs_exact
    is filled only when the caller supplies the exact value.
    """

    n: int
    value: float
    relative_error_vs_exact: float | None = None


def asymptotic_u_tilde(n: int, exact: int | None = None) -> AsymptoticEstimate:
    """Evaluate sqrt(3) (24n-1)^(-3/4) exp((pi/6) sqrt(24n-1))
    (1 + (pi^2-9) / (4 pi sqrt(24n-1)))."""
    if n < 1:
        raise ValueError("estimate defined for n >= 1 only")
    m = 24 * n - 1
    root = math.sqrt(m)
    value = (
        math.sqrt(3.0)
        * m ** -0.75
        * math.exp(math.pi / 6.0 * root)
        * (1.0 + (math.pi**2 - 9.0) / (4.0 * math.pi * root))
    )
    err = None if exact is None else abs(value / exact - 1.0)
    return AsymptoticEstimate(n, value, err)


def verify_bounds(limit: int) -> bool:
    """Check u/2 <= v <= u and u <= c <= 2u for 1 <= n <= limit.

    All comparisons are exact; the lower sandwich is tested as
    2 v(n) >= u_tilde(n) to stay in integers.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    table = CountTable.build(limit)
    for n in range(1, limit + 1):
        u, v, c = table.u_tilde[n], table.v[n], table.c[n]
        if not (2 * v >= u and v <= u):
            return False
        if not (u <= c <= 2 * u):
            return False
    return True
