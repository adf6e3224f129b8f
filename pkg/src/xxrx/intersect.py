"""The quadruple word family (01)^i (10)^j (01)^k (10)^l.

Membership of these words in the x x^R x avoiding language collapses to
a closed-form condition on the four exponents:

    (i < j or k < j) and (j < k or l < k)

verify_intersection_claim checks that equivalence exhaustively on a box
of exponents, word by word, against the direct pattern scan.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .words import avoids_xxrx_naive

__all__ = [
    "IntersectionReport",
    "QuadCase",
    "QuadExponents",
    "build_quad_word",
    "quad_predicate",
    "verify_intersection_claim",
]

MAX_QUAD_EXPONENT = 10


@dataclass(frozen=True)
class QuadExponents:
    i: int
    j: int
    k: int
    l: int

    def __post_init__(self) -> None:
        for name, e in (("i", self.i), ("j", self.j), ("k", self.k), ("l", self.l)):
            if not isinstance(e, int) or e < 1:
                raise ValueError(f"exponent {name} must be a positive integer, got {e!r}")


def quad_predicate(e: QuadExponents) -> bool:
    """The closed-form membership condition on the exponents."""
    return (e.i < e.j or e.k < e.j) and (e.j < e.k or e.l < e.k)


def build_quad_word(e: QuadExponents) -> str:
    return "01" * e.i + "10" * e.j + "01" * e.k + "10" * e.l


@dataclass(frozen=True)
class QuadCase:
    """One evaluated quadruple with both verdicts."""

    exponents: QuadExponents
    in_l: bool
    predicate: bool


@dataclass(frozen=True)
class IntersectionReport:
    max_exp: int
    total_cases: int
    mismatches: tuple[QuadCase, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_text(self) -> str:
        head = f"quadruple check: {self.total_cases} cases with exponents up to {self.max_exp}"
        if self.ok:
            return head + ": scan and predicate agree everywhere\n"
        lines = [head + f": {len(self.mismatches)} mismatches"]
        lines.extend(
            f"  (i,j,k,l)=({c.exponents.i},{c.exponents.j},{c.exponents.k},{c.exponents.l})"
            f" in_L={c.in_l} predicate={c.predicate}"
            for c in self.mismatches
        )
        return "\n".join(lines) + "\n"

    def as_csv(self) -> str:
        lines = ["i,j,k,l,in_L,predicate"]
        lines.extend(
            f"{c.exponents.i},{c.exponents.j},{c.exponents.k},{c.exponents.l},"
            f"{str(c.in_l).lower()},{str(c.predicate).lower()}"
            for c in self.mismatches
        )
        return "\n".join(lines) + "\n"


def verify_intersection_claim(max_exp: int) -> IntersectionReport:
    """Scan every quadruple in [1, max_exp]^4 and report disagreements
    between actual membership and the exponent predicate (expected: none)."""
    if not 1 <= max_exp <= MAX_QUAD_EXPONENT:
        raise ValueError(f"max_exp must be between 1 and {MAX_QUAD_EXPONENT}")
    mismatches = []
    rng = range(1, max_exp + 1)
    for i, j, k, l in itertools.product(rng, repeat=4):
        e = QuadExponents(i, j, k, l)
        in_l = avoids_xxrx_naive(build_quad_word(e))
        pred = quad_predicate(e)
        if in_l != pred:
            mismatches.append(QuadCase(e, in_l, pred))
    return IntersectionReport(max_exp, max_exp**4, tuple(mismatches))
