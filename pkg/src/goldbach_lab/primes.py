"""Prime generation and primality testing.

Every answer is exact: point tests use a Miller-Rabin base set that is
deterministic for all n < 2**64, and interval queries come from a segmented
sieve of Eratosthenes with odd-only marking.  No probabilistic verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, log
from typing import Iterator

from .errors import InvalidInterval, OutOfBounds, SegmentTooLarge

DEFAULT_SEGMENT_CAP = 1 << 26  # max entries per sieved segment
DEFAULT_NTH_PRIME_LIMIT = 1 << 32  # largest value nth_prime will sieve toward

_WORD_LIMIT = 1 << 64

# Sinclair's bases: Miller-Rabin with these is exact for every n < 2**64.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_TINY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Exact primality verdict for 0 <= n < 2**64."""
    if n < 0 or n >= _WORD_LIMIT:
        raise ValueError(f"is_prime domain is [0, 2**64): got {n}")
    if n < 2:
        return False
    for p in _TINY_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d & 1 == 0:
        d >>= 1
        s += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> tuple[int, ...]:
    """Primes <= limit by a plain sieve; cached as an immutable tuple."""
    if limit < 2:
        return ()
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
    return tuple(i for i, f in enumerate(flags) if f)


@dataclass(frozen=True)
class PrimeSegment:
    """Primality table for a closed interval [lo, hi], one flag per integer.

    flags[k] is 1 exactly when lo + k is prime.  The table is immutable, so
    a segment can be shared freely between workers.
    """

    lo: int
    hi: int
    flags: bytes

    def is_prime_at(self, n: int) -> bool:
        if not self.lo <= n <= self.hi:
            raise InvalidInterval(f"{n} outside segment [{self.lo}, {self.hi}]")
        return bool(self.flags[n - self.lo])

    def count(self) -> int:
        """Number of primes in the segment."""
        return self.flags.count(1)

    def primes(self) -> list[int]:
        lo = self.lo
        return [lo + k for k, f in enumerate(self.flags) if f]

    def restrict(self, lo: int, hi: int) -> PrimeSegment:
        """Sub-segment; equal to sieving [lo, hi] directly."""
        if not (self.lo <= lo <= hi <= self.hi):
            raise InvalidInterval(
                f"[{lo}, {hi}] not contained in [{self.lo}, {self.hi}]"
            )
        return PrimeSegment(lo, hi, self.flags[lo - self.lo : hi - self.lo + 1])


def sieve_segment(lo: int, hi: int, *, cap: int = DEFAULT_SEGMENT_CAP) -> PrimeSegment:
    """Sieve the closed interval [lo, hi].

    Only odd positions are marked during sieving; even positions other than
    2 are composite by construction.
    """
    if lo < 1 or lo > hi:
        raise InvalidInterval(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    span = hi - lo + 1
    if span > cap:
        raise SegmentTooLarge(f"span {span} exceeds cap {cap}")
    flags = bytearray(span)
    if lo <= 2 <= hi:
        flags[2 - lo] = 1
    first_odd = lo | 1
    if first_odd <= hi:
        n_odd = (hi - first_odd) // 2 + 1
        mask = bytearray(b"\x01") * n_odd
        if first_odd == 1:
            mask[0] = 0
        for p in _base_primes(isqrt(hi)):
            if p == 2:
                continue
            start = max(p * p, (lo + p - 1) // p * p)
            if start % 2 == 0:
                start += p
            if start > hi:
                continue
            i = (start - first_odd) // 2
            mask[i::p] = b"\x00" * ((n_odd - 1 - i) // p + 1)
        flags[first_odd - lo :: 2] = mask
    return PrimeSegment(lo, hi, bytes(flags))


def iter_segments(
    lo: int, hi: int, *, cap: int = DEFAULT_SEGMENT_CAP
) -> Iterator[PrimeSegment]:
    """Yield consecutive cap-sized segments covering [lo, hi]."""
    if lo < 1 or lo > hi:
        raise InvalidInterval(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    start = lo
    while start <= hi:
        end = min(start + cap - 1, hi)
        yield sieve_segment(start, end, cap=cap)
        start = end + 1


def prime_count(lo: int, hi: int, *, cap: int = DEFAULT_SEGMENT_CAP) -> int:
    """Number of primes p with lo <= p <= hi."""
    return sum(seg.count() for seg in iter_segments(lo, hi, cap=cap))


def _nth_prime_bound(x: int) -> int:
    # Rosser: the x-th prime is below x*(ln x + ln ln x) for x >= 6.
    if x < 6:
        return 12
    lx = log(x)
    return int(x * (lx + log(lx))) + 1


def nth_prime(x: int, *, limit: int = DEFAULT_NTH_PRIME_LIMIT) -> int:
    """The x-th prime in increasing order; nth_prime(1) == 2."""
    if x < 1:
        raise ValueError(f"need x >= 1, got {x}")
    bound = _nth_prime_bound(x)
    if bound > limit:
        raise OutOfBounds(f"prime #{x} would need sieving past {limit}")
    remaining = x
    for seg in iter_segments(1, bound):
        in_seg = seg.count()
        if remaining > in_seg:
            remaining -= in_seg
            continue
        pos = -1
        for _ in range(remaining):
            pos = seg.flags.index(1, pos + 1)
        return seg.lo + pos
    raise OutOfBounds(f"bound {bound} did not reach prime #{x}")


def iter_primes(start: int = 2, *, chunk: int = 1 << 16) -> Iterator[int]:
    """Ascending primes >= start, sieving new segments on demand."""
    lo = max(start, 1)
    while True:
        hi = lo + chunk - 1
        yield from sieve_segment(lo, hi).primes()
        lo = hi + 1
