"""Checkpointed bulk verification that every even splits into two primes.

The fast path works blockwise on big-integer bitsets: with segment primes
packed one byte apart, ``prime_bits << 8*p`` marks every sum p + q, so one
shift-and-mask per small prime resolves a whole block of evens.  Evens left
unresolved by every small prime (none are expected below the known search
records) fall back to the exhaustive dc search, which either produces a
pair or reports the even as a failure.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from functools import lru_cache
from typing import Optional

from .dc import dc_min
from .errors import CheckpointMismatch, GoldbachCounterexample, NotEven
from .primes import sieve_segment

BLOCK_EVENS = 1 << 16  # evens handed to a worker at a time
DEFAULT_CHECKPOINT_STRIDE = 1 << 20  # evens between checkpoint writes
CHECKPOINT_VERSION = 1

_PAIR_PRIME_BOUND = 1 << 14  # small-prime budget before the exhaustive fallback

_CHECKPOINT_FIELDS = (
    "version",
    "from",
    "to",
    "last_verified",
    "failures",
    "started_at",
    "updated_at",
)


@dataclass(frozen=True)
class SweepCheckpoint:
    """Persistent sweep progress with a fixed, version-gated field set."""

    version: int
    from_even: int
    to_even: int
    last_verified: int
    failures: tuple[int, ...]
    started_at: str
    updated_at: str


@dataclass(frozen=True)
class SweepSummary:
    """Outcome of one verify run; elapsed time never enters serialized payloads."""

    from_even: int
    to_even: int
    verified: int
    failures: tuple[int, ...]
    elapsed_seconds: float
    resumed_from: Optional[int] = None


def _utcnow() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@lru_cache(maxsize=1)
def _pair_primes() -> tuple[int, ...]:
    return tuple(sieve_segment(2, _PAIR_PRIME_BOUND).primes())


def verify_block(lo: int, hi: int) -> list[int]:
    """Evens in [lo, hi] with no two-prime decomposition (expected: none)."""
    if lo % 2 or hi % 2:
        raise NotEven(f"block bounds must be even, got [{lo}, {hi}]")
    seg_lo = max(2, lo - _PAIR_PRIME_BOUND)
    seg = sieve_segment(seg_lo, hi)
    # bit 8*(n - seg_lo) marks prime n; shifting by 8*p lands on p + q
    prime_bits = int.from_bytes(seg.flags, "little")
    targets = bytearray(hi - seg_lo + 1)
    targets[lo - seg_lo :: 2] = b"\x01" * ((hi - lo) // 2 + 1)
    unresolved = int.from_bytes(bytes(targets), "little")
    for p in _pair_primes():
        unresolved &= ~(prime_bits << (8 * p))
        if not unresolved:
            return []
    failures = []
    raw = unresolved.to_bytes((unresolved.bit_length() + 7) // 8, "little")
    for offset, byte in enumerate(raw):
        if byte:
            try:
                dc_min(seg_lo + offset)
            except GoldbachCounterexample as exc:
                failures.append(exc.target)
    return failures


def _verify_block_task(block: tuple[int, int]) -> list[int]:
    return verify_block(*block)


def _blocks(first: int, last: int) -> list[tuple[int, int]]:
    out = []
    lo = first
    while lo <= last:
        hi = min(lo + 2 * (BLOCK_EVENS - 1), last)
        out.append((lo, hi))
        lo = hi + 2
    return out


def checkpoint_to_json(cp: SweepCheckpoint) -> str:
    doc = {
        "version": cp.version,
        "from": cp.from_even,
        "to": cp.to_even,
        "last_verified": cp.last_verified,
        "failures": list(cp.failures),
        "started_at": cp.started_at,
        "updated_at": cp.updated_at,
    }
    return json.dumps(doc, sort_keys=True) + "\n"


def checkpoint_from_json(text: str) -> SweepCheckpoint:
    """Parse and validate a checkpoint document; reject anything off-contract."""
    doc = json.loads(text)
    if not isinstance(doc, dict):
        raise CheckpointMismatch("checkpoint is not a JSON object")
    unknown = set(doc) - set(_CHECKPOINT_FIELDS)
    if unknown:
        raise CheckpointMismatch(f"unknown checkpoint fields: {sorted(unknown)}")
    missing = set(_CHECKPOINT_FIELDS) - set(doc)
    if missing:
        raise CheckpointMismatch(f"missing checkpoint fields: {sorted(missing)}")
    if doc["version"] != CHECKPOINT_VERSION:
        raise CheckpointMismatch(f"unsupported checkpoint version {doc['version']!r}")
    cp = SweepCheckpoint(
        version=doc["version"],
        from_even=doc["from"],
        to_even=doc["to"],
        last_verified=doc["last_verified"],
        failures=tuple(doc["failures"]),
        started_at=doc["started_at"],
        updated_at=doc["updated_at"],
    )
    if not cp.from_even <= cp.last_verified <= cp.to_even:
        raise CheckpointMismatch("checkpoint bounds out of order")
    for n in (cp.from_even, cp.to_even, cp.last_verified):
        if n % 2:
            raise CheckpointMismatch(f"checkpoint bound {n} is odd")
    for f in cp.failures:
        if f % 2 or not cp.from_even <= f <= cp.to_even:
            raise CheckpointMismatch(f"checkpoint failure {f} outside bounds")
    return cp


def read_checkpoint(path: str) -> SweepCheckpoint:
    with open(path, "r", encoding="utf-8") as fh:
        return checkpoint_from_json(fh.read())


def write_checkpoint(path: str, cp: SweepCheckpoint) -> None:
    """Write-to-temp-then-rename so the file on disk is always complete."""
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(checkpoint_to_json(cp))
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def run_verify(
    from_even: int,
    to_even: int,
    *,
    workers: int = 1,
    checkpoint_path: Optional[str] = None,
    checkpoint_stride: int = DEFAULT_CHECKPOINT_STRIDE,
) -> SweepSummary:
    """Verify a two-prime decomposition for every even in [from_even, to_even].

    With a checkpoint path, progress is persisted every ``checkpoint_stride``
    evens and a matching checkpoint resumes after last_verified.  Blocks are
    merged in order, so the summary is independent of the worker count.
    """
    if from_even % 2 or to_even % 2:
        raise NotEven(f"bounds must be even, got [{from_even}, {to_even}]")
    if not 4 <= from_even <= to_even:
        raise ValueError(f"need 4 <= from <= to, got [{from_even}, {to_even}]")
    if workers < 1:
        raise ValueError(f"need workers >= 1, got {workers}")
    if checkpoint_stride < 1:
        raise ValueError(f"need checkpoint_stride >= 1, got {checkpoint_stride}")

    started_at = _utcnow()
    start_at = from_even
    failures: list[int] = []
    resumed_from: Optional[int] = None
    if checkpoint_path and os.path.exists(checkpoint_path):
        cp = read_checkpoint(checkpoint_path)
        if (cp.from_even, cp.to_even) != (from_even, to_even):
            raise CheckpointMismatch(
                f"checkpoint covers [{cp.from_even}, {cp.to_even}], "
                f"requested [{from_even}, {to_even}]"
            )
        start_at = cp.last_verified + 2
        failures = list(cp.failures)
        started_at = cp.started_at
        resumed_from = cp.last_verified

    t0 = time.perf_counter()
    blocks = _blocks(start_at, to_even)
    evens_since_checkpoint = 0

    def flush_checkpoint(last_verified: int) -> None:
        if checkpoint_path:
            write_checkpoint(
                checkpoint_path,
                SweepCheckpoint(
                    CHECKPOINT_VERSION,
                    from_even,
                    to_even,
                    last_verified,
                    tuple(sorted(failures)),
                    started_at,
                    _utcnow(),
                ),
            )

    if workers > 1 and len(blocks) > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.imap(_verify_block_task, blocks)
            for (lo, hi), block_failures in zip(blocks, results):
                failures.extend(block_failures)
                evens_since_checkpoint += (hi - lo) // 2 + 1
                if evens_since_checkpoint >= checkpoint_stride and hi < to_even:
                    flush_checkpoint(hi)
                    evens_since_checkpoint = 0
    else:
        for lo, hi in blocks:
            failures.extend(verify_block(lo, hi))
            evens_since_checkpoint += (hi - lo) // 2 + 1
            if evens_since_checkpoint >= checkpoint_stride and hi < to_even:
                flush_checkpoint(hi)
                evens_since_checkpoint = 0

    flush_checkpoint(to_even)
    elapsed = time.perf_counter() - t0
    total = (to_even - from_even) // 2 + 1
    failures_sorted = tuple(sorted(failures))
    return SweepSummary(
        from_even,
        to_even,
        total - len(failures_sorted),
        failures_sorted,
        elapsed,
        resumed_from,
    )
