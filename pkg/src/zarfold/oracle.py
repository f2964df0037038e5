"""Exhaustive ground truth for bounded-partial-quotient questions.

An integer d >= 2 is called A-Zaremba when some reduced fraction b/d has a
canonical expansion whose partial quotients are all at most A.  The
functions here settle that question by brute force, scan ranges of
denominators (optionally in parallel), and enumerate every denominator
reachable with bounded quotients.  They are deliberately independent of the
folding machinery so the two can cross-check each other.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .cf import ContinuedFraction, evaluate

__all__ = [
    "ZarembaWitness",
    "ScanReport",
    "is_zaremba",
    "witnesses",
    "scan_range",
    "enumerate_bounded_denominators",
]


@dataclass(frozen=True)
class ZarembaWitness:
    """Reduced fraction numerator/d whose quotients all stay within ``bound``."""

    d: int
    bound: int
    numerator: int
    cf: ContinuedFraction

    def __post_init__(self) -> None:
        value = evaluate(self.cf)
        if (value.numerator, value.denominator) != (self.numerator, self.d):
            raise ValueError(
                f"expansion {self.cf} evaluates to {value}, not {self.numerator}/{self.d}"
            )
        if max(self.cf.quotients) > self.bound:
            raise ValueError(f"expansion {self.cf} exceeds the quotient bound {self.bound}")


@dataclass(frozen=True)
class ScanReport:
    """Denominators in [lo, hi] with no bounded-quotient fraction."""

    bound: int
    lo: int
    hi: int
    exceptions: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "A": self.bound,
            "lo": self.lo,
            "hi": self.hi,
            "exceptions": list(self.exceptions),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ScanReport":
        return cls(
            bound=int(data["A"]),
            lo=int(data["lo"]),
            hi=int(data["hi"]),
            exceptions=tuple(int(d) for d in data["exceptions"]),
        )


def _bounded_quotients(b: int, d: int, bound: int) -> tuple[int, ...] | None:
    # Euclidean expansion of b/d, abandoned as soon as a quotient exceeds the bound.
    x, y = d, b
    qs = []
    while y:
        a, r = divmod(x, y)
        if a > bound:
            return None
        qs.append(a)
        x, y = y, r
    return tuple(qs)


def _validate_query(d: int, bound: int) -> None:
    if not isinstance(d, int) or d < 2:
        raise ValueError(f"denominator must be an integer >= 2, got {d!r}")
    if not isinstance(bound, int) or bound < 1:
        raise ValueError(f"quotient bound must be an integer >= 1, got {bound!r}")


def is_zaremba(d: int, bound: int) -> ZarembaWitness | None:
    """Witness with the smallest numerator, or None when no numerator works."""
    _validate_query(d, bound)
    gcd = math.gcd
    for b in range(1, d):
        if gcd(b, d) != 1:
            continue
        qs = _bounded_quotients(b, d, bound)
        if qs is not None:
            return ZarembaWitness(d, bound, b, ContinuedFraction(qs))
    return None


def witnesses(d: int, bound: int) -> Iterator[ZarembaWitness]:
    """Every witness for d, in increasing numerator order."""
    _validate_query(d, bound)
    gcd = math.gcd
    for b in range(1, d):
        if gcd(b, d) != 1:
            continue
        qs = _bounded_quotients(b, d, bound)
        if qs is not None:
            yield ZarembaWitness(d, bound, b, ContinuedFraction(qs))


def _scan_block(task: tuple[int, int, int]) -> list[int]:
    lo, hi, bound = task
    gcd = math.gcd
    misses = []
    for d in range(lo, hi + 1):
        for b in range(1, d):
            if gcd(b, d) != 1:
                continue
            if _bounded_quotients(b, d, bound) is not None:
                break
        else:
            misses.append(d)
    return misses


def scan_range(lo: int, hi: int, bound: int, jobs: int = 1) -> ScanReport:
    """Scan every denominator in [lo, hi] and report the ones with no witness.

    With jobs > 1 the range is split into contiguous blocks handled by worker
    processes.  Each denominator is independent and blocks are merged in range
    order, so the report is identical for every degree of parallelism.
    """
    if not isinstance(lo, int) or not isinstance(hi, int) or lo < 2 or hi < lo:
        raise ValueError(f"scan range must satisfy 2 <= lo <= hi, got [{lo!r}, {hi!r}]")
    if not isinstance(bound, int) or bound < 1:
        raise ValueError(f"quotient bound must be an integer >= 1, got {bound!r}")
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError(f"jobs must be an integer >= 1, got {jobs!r}")
    if jobs == 1:
        exceptions = _scan_block((lo, hi, bound))
    else:
        span = hi - lo + 1
        block = max(1, math.ceil(span / (jobs * 4)))
        tasks = [(start, min(start + block - 1, hi), bound) for start in range(lo, hi + 1, block)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_scan_block, tasks)
            exceptions = [d for part in parts for d in part]
    return ScanReport(bound, lo, hi, tuple(exceptions))


def enumerate_bounded_denominators(bound: int, limit: int) -> set[int]:
    """All denominators <= limit of expansions with quotients at most ``bound``.

    Walks the tree of expansion prefixes through the continuant recurrence
    q = a*q_prev + q_prevprev, pruning once q exceeds the limit.  A prefix
    contributes a denominator when closed with a final quotient of at least 2;
    for bound 1 the final quotient may still be 2, since that is the canonical
    form of an all-ones expansion.
    """
    if not isinstance(bound, int) or bound < 1:
        raise ValueError(f"quotient bound must be an integer >= 1, got {bound!r}")
    if not isinstance(limit, int) or limit < 2:
        raise ValueError(f"limit must be an integer >= 2, got {limit!r}")
    final_max = max(bound, 2)
    found: set[int] = set()
    stack = [(1, 0)]
    while stack:
        q, q_prev = stack.pop()
        for a in range(1, final_max + 1):
            q_next = a * q + q_prev
            if q_next > limit:
                break
            if 2 <= a:
                found.add(q_next)
            if a <= bound:
                stack.append((q_next, q))
    return found
