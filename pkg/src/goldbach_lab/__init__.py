"""Goldbach decomposition verifier and row-relation audit toolkit."""

from .audit import (
    ALL_RELATIONS,
    AuditReport,
    EvenAudit,
    RangeAudit,
    RelationCheck,
    audit_range,
    audit_row,
    implication_eval,
)
from .census import RowCensus, census_range, census_row
from .dc import (
    DcResult,
    dc_min,
    dc_oracle,
    dc_oracle_table,
    decompositions,
    goldbach_pairs,
)
from .errors import (
    AboveEnumerationCap,
    AboveOracleCap,
    CheckpointMismatch,
    EmptyCandidate,
    GoldbachCounterexample,
    GoldbachLabError,
    InvalidInterval,
    NonDivisibleWidth,
    NotEven,
    OutOfBounds,
    OverlappingRows,
    SegmentTooLarge,
    TargetTooSmall,
    WidthExceedsRange,
)
from .primes import (
    PrimeSegment,
    is_prime,
    iter_primes,
    nth_prime,
    prime_count,
    sieve_segment,
)
from .rowrange import (
    Range,
    Row,
    ValidationVerdict,
    partition_rows,
    successor_offset,
    validate_range,
    validate_row,
)
from .sweep import SweepCheckpoint, SweepSummary, run_verify, verify_block

__version__ = "0.1.0"

__all__ = [
    "ALL_RELATIONS",
    "AboveEnumerationCap",
    "AboveOracleCap",
    "AuditReport",
    "CheckpointMismatch",
    "DcResult",
    "EmptyCandidate",
    "EvenAudit",
    "GoldbachCounterexample",
    "GoldbachLabError",
    "InvalidInterval",
    "NonDivisibleWidth",
    "NotEven",
    "OutOfBounds",
    "OverlappingRows",
    "PrimeSegment",
    "Range",
    "RangeAudit",
    "RelationCheck",
    "Row",
    "RowCensus",
    "SegmentTooLarge",
    "SweepCheckpoint",
    "SweepSummary",
    "TargetTooSmall",
    "ValidationVerdict",
    "WidthExceedsRange",
    "audit_range",
    "audit_row",
    "census_range",
    "census_row",
    "dc_min",
    "dc_oracle",
    "dc_oracle_table",
    "decompositions",
    "goldbach_pairs",
    "implication_eval",
    "is_prime",
    "iter_primes",
    "nth_prime",
    "partition_rows",
    "prime_count",
    "run_verify",
    "sieve_segment",
    "successor_offset",
    "validate_range",
    "validate_row",
    "verify_block",
]
