"""Block factorization of triple-free binary words and the fast recognizer.

A binary word with no 000 or 111 factor splits uniquely at its doubled
letters into maximal alternating blocks; each doubled letter ends one
block and starts the next.  The profile records the block lengths
(n_0,...,n_k), which sum to the word length.  Words with no doubled
letter get the single-entry profile (|w|); the empty word gets ().

A word avoids x x^R x exactly when it is triple-free and its profile is
valley-free, so membership reduces to one left-to-right pass.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from . import _backend
from .sequences import format_sequence, parse_sequence
from .words import check_word

__all__ = [
    "FactorDomainError",
    "Factorization",
    "ProfileError",
    "factorize",
    "format_profile",
    "is_in_l_linear",
    "parse_profile",
    "profile",
    "reconstruct",
    "validate_profile",
]


class FactorDomainError(ValueError):
    """Raised on words containing 000 or 111, where no factorization exists."""


class ProfileError(ValueError):
    """Raised on profiles no triple-free word can have."""


def profile(w: str) -> tuple[int, ...]:
    """Block-length profile of a triple-free word."""
    w = check_word(w)
    if "000" in w or "111" in w:
        raise FactorDomainError("word contains 000 or 111; factorization undefined")
    return tuple(_backend.profile_of(w.encode("ascii")))


@dataclass(frozen=True)
class Factorization:
    """Start letter plus profile; together they determine the word.

    After each doubled letter the continuation is forced (it must
    alternate, or a triple appears), so no block content is stored.
    ``start_letter`` is None only for the empty word.
    """

    start_letter: str | None
    profile: tuple[int, ...]

    def to_word(self) -> str:
        if self.start_letter is None:
            if self.profile:
                raise ProfileError("nonempty profile needs a start letter")
            return ""
        return reconstruct(self.start_letter, self.profile)


def factorize(w: str) -> Factorization:
    """Split w at its doubled letters; inverse of reconstruct."""
    p = profile(w)
    return Factorization(w[0] if w else None, p)


def validate_profile(entries: Iterable[int]) -> tuple[int, ...]:
    """Return the profile as a tuple; reject shapes no word realizes.

    Every entry must be positive and interior entries at least 2 (an
    interior block carries a doubled letter at both ends).
    """
    p = tuple(entries)
    for d in p:
        if not isinstance(d, int) or d < 1:
            raise ProfileError(f"profile entries must be positive integers, found {d!r}")
    for d in p[1:-1]:
        if d < 2:
            raise ProfileError(f"interior profile entries must be at least 2, found {d}")
    return p


def reconstruct(start_letter: str, entries: Iterable[int]) -> str:
    """The unique triple-free word with the given start letter and profile.

    Emits one alternating block per entry; each block begins with the
    letter the previous block ended on, which creates the doubled letter
    at the junction.
    """
    if start_letter not in ("0", "1"):
        raise ValueError(f"start letter must be '0' or '1', not {start_letter!r}")
    p = validate_profile(entries)
    blocks = []
    c = start_letter
    for length in p:
        period = c + ("1" if c == "0" else "0")
        block = (period * ((length + 1) // 2))[:length]
        blocks.append(block)
        c = block[-1]
    return "".join(blocks)


def is_in_l_linear(w: str) -> bool:
    """Linear-time test for avoidance of x x^R x.

    Rejects on any triple letter, then streams the profile and rejects
    on the first valley.  Agrees with the direct instance scan.
    """
    return _backend.is_member(check_word(w).encode("ascii"))


def format_profile(entries: Iterable[int]) -> str:
    """Render a profile as "(4,4,4)"; the empty profile as "()"."""
    return format_sequence(entries)


def parse_profile(text: str) -> tuple[int, ...]:
    """Parse "(4,4,4)" back into a tuple; validates the profile shape."""
    return validate_profile(parse_sequence(text))
