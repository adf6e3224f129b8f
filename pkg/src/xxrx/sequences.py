"""Valley-free positive sequences and their partition-pair encoding.

A sequence (d_1,...,d_m) of positive integers is valley-free when no
interior index j has d_{j-1} >= d_j <= d_{j+1}.  Such sequences rise
strictly to a peak and then fall strictly; the peak is either a single
strict maximum or one pair of equal adjacent maxima.  Splitting at the
peak writes the sequence as an increasing run followed by a reversed
increasing run, i.e. a pair of partitions into distinct parts.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

__all__ = [
    "NotInXError",
    "PartitionPair",
    "SequenceClass",
    "SequenceKind",
    "classify",
    "format_pair",
    "format_sequence",
    "in_x",
    "pair_to_sequence",
    "parse_sequence",
    "sequence_to_pairs",
]


class NotInXError(ValueError):
    """Raised when an operation requires a valley-free sequence."""


class SequenceKind(enum.Enum):
    TYPE1 = "type1"          # strict peak: rises strictly, falls strictly
    TYPE2 = "type2"          # two equal adjacent maxima, strict elsewhere
    NOT_IN_X = "not-in-x"    # has a valley


@dataclass(frozen=True)
class SequenceClass:
    """Classification verdict with a checkable witness index.

    For TYPE1 and TYPE2 the witness is the 1-based peak index (for TYPE2
    the second of the equal pair; 0 for the empty sequence).  For
    NOT_IN_X it is the smallest 1-based valley index.
    """

    kind: SequenceKind
    witness: int


def _entries(seq: Iterable[int]) -> tuple[int, ...]:
    out = tuple(seq)
    for d in out:
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"sequence entries must be positive integers, found {d!r}")
    return out


def classify(seq: Iterable[int]) -> SequenceClass:
    """Classify a positive sequence as TYPE1, TYPE2, or NOT_IN_X.

    Empty and single-entry sequences are TYPE1 by convention (witness 0
    and 1 respectively); they are vacuously peak-shaped.
    """
    s = _entries(seq)
    m = len(s)
    for j in range(1, m - 1):
        if s[j - 1] >= s[j] <= s[j + 1]:
            return SequenceClass(SequenceKind.NOT_IN_X, j + 1)
    # valley-free: at most one equal adjacent pair, and it sits at the peak
    for j in range(m - 1):
        if s[j] == s[j + 1]:
            return SequenceClass(SequenceKind.TYPE2, j + 2)
    if m == 0:
        return SequenceClass(SequenceKind.TYPE1, 0)
    return SequenceClass(SequenceKind.TYPE1, s.index(max(s)) + 1)


def in_x(seq: Iterable[int]) -> bool:
    """True iff the sequence is valley-free (TYPE1 or TYPE2)."""
    return classify(seq).kind is not SequenceKind.NOT_IN_X


def _strictly_increasing(parts: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(parts, parts[1:]))


@dataclass(frozen=True)
class PartitionPair:
    """Two partitions into distinct parts, each stored strictly increasing.

    ``lam`` supplies the rising run of a sequence; ``mu`` is read in
    reverse to supply the falling run.
    """

    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", _entries(self.lam))
        object.__setattr__(self, "mu", _entries(self.mu))
        for name, parts in (("lam", self.lam), ("mu", self.mu)):
            if not _strictly_increasing(parts):
                raise ValueError(f"{name} must have strictly increasing parts, got {parts}")

    @property
    def weight(self) -> int:
        return sum(self.lam) + sum(self.mu)


def pair_to_sequence(pair: PartitionPair) -> tuple[int, ...]:
    """Concatenate lam ascending with mu descending; always valley-free."""
    return pair.lam + pair.mu[::-1]


def sequence_to_pairs(seq: Iterable[int]) -> set[PartitionPair]:
    """All pairs that encode the given valley-free sequence.

    Every cut point whose prefix rises strictly and whose suffix falls
    strictly yields a pair; there are exactly two for a strict peak (the
    peak may go to either side), one when the maxima are an equal pair,
    and one for the empty sequence.
    """
    s = _entries(seq)
    if not in_x(s):
        raise NotInXError(f"sequence {s} has a valley; no pair encoding exists")
    out = set()
    for cut in range(len(s) + 1):
        lam, mu = s[:cut], s[cut:][::-1]
        if _strictly_increasing(lam) and _strictly_increasing(mu):
            out.add(PartitionPair(lam, mu))
    return out


def format_sequence(seq: Iterable[int]) -> str:
    """Render entries as "(1,3,2)"; the empty sequence as "()"."""
    return "(" + ",".join(str(d) for d in seq) + ")"


def parse_sequence(text: str) -> tuple[int, ...]:
    """Inverse of format_sequence; tolerates spaces and a trailing comma."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"expected a parenthesized sequence, got {text!r}")
    inner = s[1:-1].strip()
    if inner.endswith(","):
        inner = inner[:-1]
    if not inner:
        return ()
    try:
        return tuple(int(part) for part in inner.split(","))
    except ValueError:
        raise ValueError(f"non-integer entry in sequence {text!r}") from None


def format_pair(pair: PartitionPair) -> str:
    """Render a pair as "λ=(1,3);μ=(2)"."""
    return f"λ={format_sequence(pair.lam)};μ={format_sequence(pair.mu)}"
