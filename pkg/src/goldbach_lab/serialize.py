"""Deterministic JSON, CSV, and text rendering of command results.

Serialized output is byte-stable: keys are sorted, number formatting is
fixed, and no timestamps or timing figures enter JSON payloads (wall time
belongs to the text rendering and stderr only).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Union

from .audit import AuditReport, RangeAudit, RelationCheck
from .census import RowCensus
from .dc import DcResult
from .primes import PrimeSegment
from .rowrange import Row
from .sweep import SweepSummary

TOOL_VERSION = "0.1.0"

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class ReportEnvelope:
    """Fixed wrapper around one command's payload."""

    tool_version: str
    command: str
    parameters: dict[str, Any]
    payload: Any

    def to_doc(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "payload": self.payload,
            "tool_version": self.tool_version,
        }


def envelope(command: str, parameters: dict[str, Any], payload: Any) -> ReportEnvelope:
    return ReportEnvelope(TOOL_VERSION, command, dict(parameters), payload)


def to_json(env: ReportEnvelope) -> str:
    return json.dumps(env.to_doc(), sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# payload builders


def _row_doc(row: Row) -> dict[str, int]:
    return {"start": row.start, "end": row.end}


def _census_doc(c: RowCensus) -> dict[str, int]:
    return {
        "gamma_even": c.gamma_even,
        "gamma_odd": c.gamma_odd,
        "gamma_prime": c.gamma_prime,
        "m": c.m,
    }


def _check_doc(c: RelationCheck) -> dict[str, Any]:
    rhs = list(c.rhs_value) if isinstance(c.rhs_value, tuple) else c.rhs_value
    return {
        "detail": c.detail,
        "holds": c.holds,
        "lhs": c.lhs_value,
        "relation_id": c.relation_id,
        "rhs": rhs,
    }


def _report_doc(report: AuditReport) -> dict[str, Any]:
    return {
        "row": _row_doc(report.row),
        "census": _census_doc(report.census),
        "row_checks": [_check_doc(c) for c in report.row_checks],
        "per_even": [
            {
                "A": even.target,
                "dc_value": even.dc_value,
                "checks": [_check_doc(c) for c in even.checks],
            }
            for even in report.per_even
        ],
    }


def audit_payload(result: RangeAudit) -> dict[str, Any]:
    return {
        "rows": [_report_doc(r) for r in result.reports],
        "verdict_summary": result.summary,
    }


def census_payload(items: list[tuple[Row, RowCensus]]) -> list[dict[str, Any]]:
    return [{"row": _row_doc(row), "census": _census_doc(c)} for row, c in items]


def dc_payload(result: DcResult, pairs: Union[list[tuple[int, int]], None] = None) -> dict:
    doc: dict[str, Any] = {
        "target": result.target,
        "value": result.value,
        "witness": list(result.witness),
    }
    if pairs is not None:
        doc["pairs"] = [list(p) for p in pairs]
    return doc


def sweep_payload(summary: SweepSummary) -> dict[str, Any]:
    return {
        "from": summary.from_even,
        "to": summary.to_even,
        "verified": summary.verified,
        "failures": list(summary.failures),
    }


def segment_payload(seg: PrimeSegment, include_primes: bool = False) -> dict[str, Any]:
    doc: dict[str, Any] = {"from": seg.lo, "to": seg.hi, "count": seg.count()}
    if include_primes:
        doc["primes"] = seg.primes()
    return doc


def partition_payload(rows: list[Row], width: int) -> dict[str, Any]:
    return {
        "from": rows[0].start,
        "to": rows[-1].end,
        "width": width,
        "rows": [_row_doc(r) for r in rows],
    }


# ---------------------------------------------------------------------------
# CSV


def _cell(value: Union[int, float, bool, tuple[int, int]]) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return f"{value[0]}..{value[1]}"
    return repr(value) if isinstance(value, float) else str(value)


def audit_csv(result: RangeAudit) -> str:
    """Two flat tables: per-row checks, a blank line, then per-A checks."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            "row_start",
            "row_end",
            "gamma_even",
            "gamma_odd",
            "gamma_prime",
            "m",
            "relation_id",
            "lhs",
            "rhs",
            "holds",
        ]
    )
    for report in result.reports:
        row, c = report.row, report.census
        for check in report.row_checks:
            writer.writerow(
                [
                    row.start,
                    row.end,
                    c.gamma_even,
                    c.gamma_odd,
                    c.gamma_prime,
                    c.m,
                    check.relation_id,
                    _cell(check.lhs_value),
                    _cell(check.rhs_value),
                    _cell(check.holds),
                ]
            )
    buf.write("\n")
    writer.writerow(["row_start", "A", "dc_value", "relation_id", "lhs", "rhs", "holds"])
    for report in result.reports:
        for even in report.per_even:
            for check in even.checks:
                writer.writerow(
                    [
                        report.row.start,
                        even.target,
                        even.dc_value,
                        check.relation_id,
                        _cell(check.lhs_value),
                        _cell(check.rhs_value),
                        _cell(check.holds),
                    ]
                )
    return buf.getvalue()


def census_csv(items: list[tuple[Row, RowCensus]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["row_start", "row_end", "gamma_even", "gamma_odd", "gamma_prime", "m"]
    )
    for row, c in items:
        writer.writerow(
            [row.start, row.end, c.gamma_even, c.gamma_odd, c.gamma_prime, c.m]
        )
    return buf.getvalue()


# ---------------------------------------------------------------------------
# text


def audit_text(result: RangeAudit) -> str:
    lines = []
    for report in result.reports:
        row, c = report.row, report.census
        lines.append(
            f"row {row.start}..{row.end}: evens={c.gamma_even} odds={c.gamma_odd} "
            f"primes={c.gamma_prime} m={c.m}"
        )
        for check in report.row_checks:
            lines.append(
                f"  {check.relation_id}: lhs={_cell(check.lhs_value)} "
                f"rhs={_cell(check.rhs_value)} holds={_cell(check.holds)}"
            )
        for even in report.per_even:
            failing = [ch.relation_id for ch in even.checks if not ch.holds]
            note = f" failing: {', '.join(failing)}" if failing else ""
            lines.append(f"  A={even.target} dc={even.dc_value}{note}")
    lines.append("summary (held/failed):")
    for rid, counts in result.summary.items():
        lines.append(f"  {rid}: {counts['held']}/{counts['failed']}")
    return "\n".join(lines) + "\n"


def census_text(items: list[tuple[Row, RowCensus]]) -> str:
    lines = [
        f"row {row.start}..{row.end}: evens={c.gamma_even} odds={c.gamma_odd} "
        f"primes={c.gamma_prime} m={c.m}"
        for row, c in items
    ]
    return "\n".join(lines) + "\n"


def dc_text(result: DcResult, pairs: Union[list[tuple[int, int]], None] = None) -> str:
    witness = " + ".join(str(w) for w in result.witness)
    lines = [f"dc({result.target}) = {result.value}  ({result.target} = {witness})"]
    if pairs is not None:
        lines.append(f"{len(pairs)} prime pairs:")
        lines.extend(f"  {p} + {q}" for p, q in pairs)
    return "\n".join(lines) + "\n"


def sweep_text(summary: SweepSummary) -> str:
    status = "0 failures" if not summary.failures else f"FAILURES: {list(summary.failures)}"
    resumed = (
        f" (resumed after {summary.resumed_from})" if summary.resumed_from is not None else ""
    )
    return (
        f"verify {summary.from_even}..{summary.to_even}: "
        f"{summary.verified} evens verified, {status} "
        f"in {summary.elapsed_seconds:.2f} s{resumed}\n"
    )
