"""Binary words and definition-level pattern-instance search.

Words are plain strings over {'0', '1'}; the empty string is the empty
word.  The instance finders try every block length t and start i in
(t, i) order, so the first hit is the one with minimal block length,
ties broken by minimal start.  This quadratic scan is the reference that
the linear recognizer in ``factorization`` is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend

__all__ = [
    "PatternInstance",
    "avoids_xxrx_naive",
    "check_word",
    "complement",
    "find_xxrx_instance",
    "find_xxxr_instance",
    "reverse",
]

_COMPLEMENT = str.maketrans("01", "10")


def check_word(w: str) -> str:
    """Return w unchanged; raise ValueError on symbols outside {'0','1'}."""
    if w.strip("01"):
        bad = w.strip("01")[0]
        raise ValueError(f"word symbols must be '0' or '1', found {bad!r}")
    return w


@dataclass(frozen=True)
class PatternInstance:
    """Three adjacent blocks of length ``block_len`` starting at ``start``."""

    start: int
    block_len: int


def complement(w: str) -> str:
    """Symbolwise 0/1 flip (an involution)."""
    return check_word(w).translate(_COMPLEMENT)


def reverse(w: str) -> str:
    """Mirror image of the word (an involution)."""
    return check_word(w)[::-1]


def find_xxrx_instance(w: str) -> PatternInstance | None:
    """Earliest instance of x x^R x: a block, its mirror image, the block
    again.  Minimal block length wins, then minimal start; None if the
    word avoids the pattern."""
    hit = _backend.scan_xxrx(check_word(w).encode("ascii"))
    return None if hit is None else PatternInstance(*hit)


def find_xxxr_instance(w: str) -> PatternInstance | None:
    """Earliest instance of x x x^R, same tie-breaking.  Only used as a
    comparison baseline; the library's enumeration targets x x^R x."""
    hit = _backend.scan_xxxr(check_word(w).encode("ascii"))
    return None if hit is None else PatternInstance(*hit)


def avoids_xxrx_naive(w: str) -> bool:
    """True iff the word has no x x^R x instance, by direct scan."""
    return find_xxrx_instance(w) is None
