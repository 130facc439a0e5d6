"""Consecutive-interval set machinery: rows, ranges, validation, partitioning.

A Row is a finite run of consecutive naturals; a Range is a larger run that
tiles exactly into Rows.  Both are stored by endpoints only, which keeps
sweeps over hundreds of millions of integers cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    EmptyCandidate,
    NonDivisibleWidth,
    OverlappingRows,
    WidthExceedsRange,
)

#: Validation property labels, in report order.
ROW_PROPERTY_LABELS = ("I", "II", "III", "IV")
RANGE_PROPERTY_LABELS = ("[1]", "[2]", "[3]", "[4]", "[5]", "[6]")


@dataclass(frozen=True)
class Row:
    """The consecutive naturals {start, start+1, ..., end}."""

    start: int
    end: int

    def __post_init__(self):
        if not 1 <= self.start <= self.end:
            raise ValueError(f"need 1 <= start <= end, got ({self.start}, {self.end})")

    @property
    def size(self) -> int:
        """Element count (the cardinality d)."""
        return self.end - self.start + 1

    def elements(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class Range:
    """The consecutive naturals {start, ..., end}; partitions into Rows."""

    start: int
    end: int

    def __post_init__(self):
        if not 1 <= self.start <= self.end:
            raise ValueError(f"need 1 <= start <= end, got ({self.start}, {self.end})")

    @property
    def size(self) -> int:
        """Element count (the cardinality D)."""
        return self.end - self.start + 1

    def elements(self) -> range:
        return range(self.start, self.end + 1)


@dataclass(frozen=True)
class ValidationVerdict:
    """Outcome of row/range validation.

    ``violations`` holds (property label, reason) pairs; ``accepted`` is true
    exactly when it is empty.  ``subject`` is the reconstructed interval and
    is present only on acceptance.
    """

    accepted: bool
    violations: tuple[tuple[str, str], ...]
    subject: Union[Row, Range, None] = None


def _checked(candidate: Sequence[int]) -> list[int]:
    values = list(candidate)
    if not values:
        raise EmptyCandidate("candidate sequence is empty")
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"candidate elements must be naturals >= 1, got {v!r}")
    return values


def validate_row(candidate: Sequence[int]) -> ValidationVerdict:
    """Check the four row properties on an explicit element sequence.

    Property II asks for unique extremes, III for ascending order as given,
    IV for unit steps between the sorted elements.  Property I (finite subset
    of the naturals) holds for any sequence that passes the preconditions.
    All violated properties are reported, not just the first.
    """
    values = _checked(candidate)
    violations: list[tuple[str, str]] = []
    if values.count(min(values)) > 1:
        violations.append(("II", "smallest element is not unique"))
    if len(values) > 1 and values.count(max(values)) > 1:
        violations.append(("II", "greatest element is not unique"))
    if any(a >= b for a, b in zip(values, values[1:])):
        violations.append(("III", "elements are not in ascending order"))
    distinct = sorted(set(values))
    if any(b - a != 1 for a, b in zip(distinct, distinct[1:])):
        violations.append(("IV", "elements do not step by exactly one"))
    if violations:
        return ValidationVerdict(False, tuple(violations))
    return ValidationVerdict(True, (), Row(values[0], values[-1]))


def validate_range(candidate: Sequence[int]) -> ValidationVerdict:
    """Check the six range properties; labels use the bracketed names.

    [1] (subset of the naturals), [2] (contains a row; a single element is a
    degenerate row) and [3] (finite cardinality) hold for any sequence that
    passes the preconditions, so only [4]-[6] can appear as violations.
    """
    values = _checked(candidate)
    violations: list[tuple[str, str]] = []
    if values.count(min(values)) > 1:
        violations.append(("[4]", "smallest element is not unique"))
    if len(values) > 1 and values.count(max(values)) > 1:
        violations.append(("[4]", "greatest element is not unique"))
    distinct = sorted(set(values))
    if any(b - a != 1 for a, b in zip(distinct, distinct[1:])):
        violations.append(("[5]", "elements do not step by exactly one"))
    if any(a >= b for a, b in zip(values, values[1:])):
        violations.append(("[6]", "elements are not in ascending order"))
    if violations:
        return ValidationVerdict(False, tuple(violations))
    return ValidationVerdict(True, (), Range(values[0], values[-1]))


def partition_rows(rng: Range, width: int) -> list[Row]:
    """Split a range into successive rows of equal width, in ascending order.

    The width must divide the range cardinality exactly; a ragged final row
    would break the even/odd balance downstream consumers rely on.
    """
    if width < 1:
        raise ValueError(f"width must be >= 1, got {width}")
    if width > rng.size:
        raise WidthExceedsRange(f"width {width} exceeds range size {rng.size}")
    if rng.size % width:
        raise NonDivisibleWidth(f"width {width} does not divide size {rng.size}")
    return [Row(s, s + width - 1) for s in range(rng.start, rng.end + 1, width)]


def successor_offset(a: Row, b: Row) -> int:
    """Signed gap b.start - a.end between two disjoint rows.

    An offset of 1 means b is the successive row of a.  Disjoint rows always
    give a nonzero offset; a negative value means b lies before a.
    """
    if a.start <= b.end and b.start <= a.end:
        raise OverlappingRows(
            f"rows [{a.start}, {a.end}] and [{b.start}, {b.end}] intersect"
        )
    return b.start - a.end
