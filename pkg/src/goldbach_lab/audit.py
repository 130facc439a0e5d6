"""Numeric evaluation of the relation catalog on concrete rows.

Each relation is checked as plain arithmetic over a row census and, where
applicable, the minimal prime-summand value of an even number in the row.
The auditor reports truth values only; failing relations are data, not
errors, and no conclusion is drawn from them.

The catalog numbering has gaps: ids (5)-(8) collapse into (9)'s final
comparator, and ids (12)-(18) mix counts with sums and admit no consistent
arithmetic reading, so neither group is evaluated.  The usable inequality
forms of the latter appear as (19) and (20), with the rewriting flagged in
their detail text.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .census import RowCensus, census_row
from .dc import dc_min
from .primes import DEFAULT_SEGMENT_CAP, PrimeSegment, sieve_segment
from .rowrange import Range, Row, partition_rows

#: Relations evaluated once per row, from the census alone.
ROW_RELATIONS = ("A1", "A2", "A3", "(3)", "(23)", "(24)", "(27)", "(28)", "(29)", "(31)")
#: Relations evaluated for every even A > 2 in the row.
EVEN_RELATIONS = (
    "(4)",
    "(9)",
    "(10)",
    "(11-1)",
    "(11-2)",
    "(11-3)",
    "(19)",
    "(20)",
    "(21)",
    "(22)",
    "(25)",
    "(26)",
    "(33)",
)
ALL_RELATIONS = ROW_RELATIONS + EVEN_RELATIONS

Number = Union[int, float]


@dataclass(frozen=True)
class RelationCheck:
    """One evaluated relation: computed sides and the arithmetic verdict.

    ``rhs_value`` is a (low, high) pair for sandwich relations.  Halves such
    as m/2 are compared exactly in integers and reported as x.5 floats.
    """

    relation_id: str
    lhs_value: Number
    rhs_value: Union[Number, tuple[int, int]]
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class EvenAudit:
    """Checks tied to one even number A > 2 inside a row."""

    target: int
    dc_value: int
    checks: tuple[RelationCheck, ...]


@dataclass(frozen=True)
class AuditReport:
    """Full audit of one row: census, row-level and per-even checks."""

    row: Row
    census: RowCensus
    row_checks: tuple[RelationCheck, ...]
    per_even: tuple[EvenAudit, ...]

    def verdict_summary(self) -> dict[str, dict[str, int]]:
        return summarize([self])


@dataclass(frozen=True)
class RangeAudit:
    """Audit reports for every row of a range plus aggregate counts."""

    reports: tuple[AuditReport, ...]
    summary: dict[str, dict[str, int]]


def implication_eval(p: bool, q: bool, r: bool) -> tuple[bool, bool]:
    """Material reading of p => (q & r): returns (conjunction, implication)."""
    conjunction = q and r
    return conjunction, (not p) or conjunction


def _half(n: int) -> Number:
    return n // 2 if n % 2 == 0 else n / 2


def evaluate_row_relations(census: RowCensus) -> list[RelationCheck]:
    """The census-only relations, in catalog order."""
    ge, go, gf, m = census.gamma_even, census.gamma_odd, census.gamma_prime, census.m
    double_total = 2 * (ge + go) - gf
    mid = ge + go + gf + 4
    return [
        RelationCheck("A1", gf, 1, gf >= 1, "row holds at least one prime"),
        RelationCheck("A2", ge, go, ge == go, "evens and odds balance"),
        RelationCheck("A3", gf, go, gf <= go, "no more primes than odds"),
        RelationCheck("(3)", gf, (1, go), 1 <= gf <= go, "prime count sandwich"),
        RelationCheck(
            "(23)",
            double_total,
            mid + (ge + go - 2 * gf - 4),
            double_total == mid + (ge + go - 2 * gf - 4),
            "algebraic identity, holds on every row",
        ),
        RelationCheck("(24)", mid, double_total, mid < double_total, ""),
        RelationCheck(
            "(27)",
            double_total,
            _half(m),
            2 * double_total <= m,
            "m/2 compared exactly, no truncation",
        ),
        RelationCheck(
            "(28)",
            2 * m - gf,
            _half(m),
            2 * (2 * m - gf) <= m,
            "m/2 compared exactly, no truncation",
        ),
        RelationCheck("(29)", _half(3 * m), gf, 3 * m <= 2 * gf, "1.5m compared exactly"),
        RelationCheck("(31)", m, gf, m < gf, ""),
    ]


def evaluate_even_relations(
    target: int, dc_value: int, census: RowCensus
) -> list[RelationCheck]:
    """The relations tied to one even A > 2, in catalog order."""
    ge, go, gf = census.gamma_even, census.gamma_odd, census.gamma_prime
    double_total = 2 * (ge + go) - gf
    mid = ge + go + gf + 4
    dc = dc_value
    p = dc > 2
    q = dc < mid
    r = dc < double_total
    conjunction, implication = implication_eval(p, q, r)
    return [
        RelationCheck("(4)", dc, ge, dc <= ge, ""),
        RelationCheck("(9)", dc, double_total, dc <= double_total, ""),
        RelationCheck("(10)", dc, (2, double_total), 2 <= dc <= double_total, ""),
        RelationCheck("(11-1)", dc, 2, dc > 2, ""),
        RelationCheck("(11-2)", dc, double_total, dc <= double_total, ""),
        RelationCheck("(11-3)", dc, 2, dc == 2, ""),
        RelationCheck(
            "(19)", dc, go + 2, dc <= go + 2, "rewritten <= form of the odd-count bound"
        ),
        RelationCheck(
            "(20)", dc, gf + 2, dc <= gf + 2, "rewritten <= form of the prime-count bound"
        ),
        RelationCheck(
            "(21)",
            2 * dc,
            ge + gf + 4,
            2 * dc <= ge + gf + 4,
            "operand set as printed: even count + prime count + 4",
        ),
        RelationCheck(
            "(22)", 2 * dc, mid, 2 * dc <= mid, "missing operator reconstructed as +"
        ),
        RelationCheck("(25)", dc, mid, q, ""),
        RelationCheck("(26)", dc, double_total, r, ""),
        RelationCheck(
            "(33)",
            int(p),
            int(conjunction),
            implication,
            f"p={p} q={q} r={r}; holds is the implication p => (q and r)",
        ),
    ]


def _relation_filter(relations: Optional[Sequence[str]]) -> frozenset[str]:
    if relations is None:
        return frozenset(ALL_RELATIONS)
    unknown = set(relations) - set(ALL_RELATIONS)
    if unknown:
        raise ValueError(f"unknown relation ids: {sorted(unknown)}")
    return frozenset(relations)


def audit_row(
    row: Row,
    relations: Optional[Sequence[str]] = None,
    segment: Optional[PrimeSegment] = None,
) -> AuditReport:
    """Evaluate the configured relations on one row.

    Row-level relations use the census alone; per-even relations are
    evaluated for every even A > 2 in the row with dc_min(A).  A row with
    no such evens yields an empty per_even section.
    """
    wanted = _relation_filter(relations)
    census = census_row(row, segment)
    row_checks = tuple(
        c for c in evaluate_row_relations(census) if c.relation_id in wanted
    )
    first_even = max(4, row.start + row.start % 2)
    per_even = []
    for target in range(first_even, row.end + 1, 2):
        value = dc_min(target).value
        checks = tuple(
            c
            for c in evaluate_even_relations(target, value, census)
            if c.relation_id in wanted
        )
        per_even.append(EvenAudit(target, value, checks))
    return AuditReport(row, census, row_checks, tuple(per_even))


def summarize(reports: Sequence[AuditReport]) -> dict[str, dict[str, int]]:
    """Held/failed counts per relation id, in catalog order."""
    held: Counter[str] = Counter()
    failed: Counter[str] = Counter()
    seen: set[str] = set()
    for report in reports:
        checks = list(report.row_checks)
        for even in report.per_even:
            checks.extend(even.checks)
        for check in checks:
            seen.add(check.relation_id)
            if check.holds:
                held[check.relation_id] += 1
            else:
                failed[check.relation_id] += 1
    return {
        rid: {"failed": failed[rid], "held": held[rid]}
        for rid in ALL_RELATIONS
        if rid in seen
    }


def _audit_row_task(args: tuple[int, int, Optional[tuple[str, ...]]]) -> AuditReport:
    start, end, relations = args
    return audit_row(Row(start, end), relations)


def audit_range(
    rng: Range,
    width: int,
    relations: Optional[Sequence[str]] = None,
    *,
    workers: int = 1,
    cap: int = DEFAULT_SEGMENT_CAP,
) -> RangeAudit:
    """Audit every partition row of a range.

    Results are merged in row order, so the output is identical for any
    worker count.
    """
    _relation_filter(relations)
    rows = partition_rows(rng, width)
    rel_tuple = tuple(relations) if relations is not None else None
    if workers > 1:
        tasks = [(row.start, row.end, rel_tuple) for row in rows]
        with multiprocessing.Pool(workers) as pool:
            reports = pool.map(_audit_row_task, tasks)
    else:
        reports = []
        if width > cap:
            reports = [audit_row(row, rel_tuple) for row in rows]
        else:
            per_chunk = max(1, cap // width)
            for i in range(0, len(rows), per_chunk):
                chunk = rows[i : i + per_chunk]
                seg = sieve_segment(chunk[0].start, chunk[-1].end, cap=cap)
                reports.extend(audit_row(row, rel_tuple, seg) for row in chunk)
    reports = tuple(reports)
    return RangeAudit(reports, summarize(reports))
