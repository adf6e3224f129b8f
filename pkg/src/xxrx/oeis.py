"""OEIS b-file parsing, rendering, and comparison with local tables.

A b-file lists one "n a(n)" pair per line.  Lines starting with '#' and
blank lines are tolerated on read and never written.  No network access
happens here; callers download files themselves.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

__all__ = [
    "BFile",
    "BFileParseError",
    "KNOWN_SEQUENCE_IDS",
    "SequenceMismatch",
    "compare_values",
    "format_bfile",
    "parse_bfile",
    "read_bfile",
]

# catalog identifiers of the columns this package tabulates
KNOWN_SEQUENCE_IDS = {"c": "A261204", "u_tilde": "A022567"}

_BFILE_NAME = re.compile(r"b(\d{6})\.txt")


class BFileParseError(ValueError):
    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class BFile:
    """Parsed entries (index, value) with strictly increasing indices."""

    entries: tuple[tuple[int, int], ...]
    sequence_id: str | None = None

    def max_index(self) -> int | None:
        return self.entries[-1][0] if self.entries else None


def parse_bfile(text: str, sequence_id: str | None = None) -> BFile:
    entries = []
    last = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"expected 'n a(n)', got {raw!r}", lineno)
        try:
            n, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(f"non-integer field in {raw!r}", lineno) from None
        if last is not None and n <= last:
            raise BFileParseError(f"indices must be strictly increasing, {n} after {last}", lineno)
        last = n
        entries.append((n, value))
    return BFile(tuple(entries), sequence_id)


def read_bfile(path: str | Path) -> BFile:
    """Parse a b-file from disk; the id is inferred from names like b261204.txt."""
    p = Path(path)
    m = _BFILE_NAME.fullmatch(p.name)
    sid = f"A{m.group(1)}" if m else None
    return parse_bfile(p.read_text(), sid)


def format_bfile(values: Sequence[int], start: int = 0) -> str:
    """Render consecutive values as b-file lines starting at index start."""
    return "".join(f"{start + i} {v}\n" for i, v in enumerate(values))


@dataclass(frozen=True)
class SequenceMismatch:
    index: int
    local: int
    reference: int


def compare_values(
    bfile: BFile, values: Sequence[int], offset: int = 0
) -> tuple[list[SequenceMismatch], int]:
    """Compare local values against a b-file on their overlapping indices.

    values[i] is taken as the term of index offset + i.  Returns the
    mismatch rows and the overlap size; an empty overlap is the caller's
    signal to warn about a vacuous comparison.
    """
    mismatches = []
    overlap = 0
    for n, reference in bfile.entries:
        i = n - offset
        if 0 <= i < len(values):
            overlap += 1
            if values[i] != reference:
                mismatches.append(SequenceMismatch(n, values[i], reference))
    return mismatches, overlap
