"""Exact big-integer inequality scanners.

Three predicates over a positive integer sequence c:

    log-concavity:   c(n)^2 >= c(n-1) c(n+1)
    Bessenrodt-Ono:  c(a) c(b) > c(a+b) over pairs 1 <= a <= b
    log-convexity:   c(n)^2 <= c(n-1) c(n+1)

All comparisons are exact integer arithmetic; equality cases are
reported separately from strict violations, never folded into them.
Scans may be chunked across threads; chunks are contiguous and merged
in order, so the report is identical for every chunking (and equal to
the serial scan).
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .series import BigIntSeq

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = None

# below this many bits plain int multiplication is not worth wrapping
_MPZ_BITS = 4096


@dataclass(frozen=True)
class ScanReport:
    """Result of one inequality scan over a window.

    violations and equalities are ascending (lexicographic for pairs).
    minimal_threshold is the smallest n0 with no violation at index
    (or pair sum) >= n0 inside the scanned window; the scan certifies
    nothing beyond hi.
    """

    family: str
    property: str
    lo: int
    hi: int
    violations: tuple
    equalities: tuple
    minimal_threshold: int

    def __post_init__(self) -> None:
        if list(self.violations) != sorted(self.violations):
            raise ValueError("violations must be sorted ascending")


def report_to_json(report: ScanReport) -> str:
    obj = {
        "family": report.family,
        "property": report.property,
        "range": [report.lo, report.hi],
        "violations": [list(v) if isinstance(v, tuple) else v for v in report.violations],
        "equalities": [list(v) if isinstance(v, tuple) else v for v in report.equalities],
        "minimal_threshold": report.minimal_threshold,
    }
    return json.dumps(obj, indent=2)


def _wrap(value: int):
    if _mpz is not None and value.bit_length() > _MPZ_BITS:
        return _mpz(value)
    return value


def _check_window(seq: BigIntSeq, lo: int, hi: int) -> None:
    if lo > hi:
        raise ValueError("empty scan window")
    if lo < seq.offset or hi > seq.last_index():
        raise ValueError(f"sequence covers [{seq.offset}, {seq.last_index()}], "
                         f"scan needs [{lo}, {hi}]")
    for n in range(lo, hi + 1):
        if seq[n] <= 0:
            raise ValueError(f"non-positive value at n={n}")


def _chunks(lo: int, hi: int, jobs: int):
    count = max(1, min(jobs * 4, hi - lo + 1))
    width, extra = divmod(hi - lo + 1, count)
    start = lo
    for i in range(count):
        stop = start + width + (1 if i < extra else 0) - 1
        if stop >= start:
            yield (start, stop)
        start = stop + 1


def _second_order_chunk(seq: BigIntSeq, lo: int, hi: int, convex: bool):
    """Violations/equalities of the second-order inequality on [lo, hi];
    values are converted once per chunk with a sliding window."""
    viols = []
    eqs = []
    prev = _wrap(seq[lo - 1])
    cur = _wrap(seq[lo])
    for n in range(lo, hi + 1):
        nxt = _wrap(seq[n + 1])
        mid = cur * cur
        side = prev * nxt
        if mid == side:
            eqs.append(n)
        elif (mid > side) if convex else (mid < side):
            viols.append(n)
        prev, cur = cur, nxt
    return viols, eqs


def _second_order_scan(
    seq: BigIntSeq, n_min: int, n_max: int, jobs: int, convex: bool
) -> ScanReport:
    if n_min > n_max:
        raise ValueError("empty scan window")
    _check_window(seq, n_min - 1, n_max + 1)
    pieces = list(_chunks(n_min, n_max, jobs))
    if jobs <= 1 or len(pieces) == 1:
        results = [_second_order_chunk(seq, a, b, convex) for a, b in pieces]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futs = [pool.submit(_second_order_chunk, seq, a, b, convex) for a, b in pieces]
            results = [f.result() for f in futs]
    viols = [n for vs, _ in results for n in vs]
    eqs = [n for _, es in results for n in es]
    threshold = (viols[-1] + 1) if viols else n_min
    prop = "log-convexity" if convex else "log-concavity"
    return ScanReport(seq.label, prop, n_min, n_max, tuple(viols), tuple(eqs), threshold)


def log_concavity_scan(
    seq: BigIntSeq, n_min: int, n_max: int, jobs: int = 1
) -> ScanReport:
    """Scan c(n)^2 >= c(n-1) c(n+1) for n in [n_min, n_max]; requires
    positive values on [n_min-1, n_max+1]."""
    if n_min < 1:
        raise ValueError("n_min must be >= 1")
    return _second_order_scan(seq, n_min, n_max, jobs, convex=False)


def log_convexity_scan(
    seq: BigIntSeq, n_min: int, n_max: int, jobs: int = 1
) -> ScanReport:
    """Scan c(n)^2 <= c(n-1) c(n+1) for n in [n_min, n_max] (intended for
    factorial-scaled counts n! N(n)); requires n_min > 1."""
    if n_min <= 1:
        raise ValueError("n_min must be > 1")
    return _second_order_scan(seq, n_min, n_max, jobs, convex=True)


def _pair_chunk(seq: BigIntSeq, a_lo: int, a_hi: int, max_sum: int):
    viols = []
    eqs = []
    for a in range(a_lo, a_hi + 1):
        ca = seq[a]
        for b in range(a, max_sum - a + 1):
            prod = ca * seq[b]
            total = seq[a + b]
            if prod < total:
                viols.append((a, b))
            elif prod == total:
                eqs.append((a, b))
    return viols, eqs


def bessenrodt_ono_scan(seq: BigIntSeq, max_sum: int, jobs: int = 1) -> ScanReport:
    """Scan c(a) c(b) > c(a+b) over all pairs 1 <= a <= b, a+b <= max_sum.

    minimal_threshold is over pair sums: the smallest s0 such that no
    violating pair has a+b >= s0 within the window.
    """
    if max_sum < 2:
        raise ValueError("max_sum must be >= 2")
    _check_window(seq, 1, max_sum)
    pieces = list(_chunks(1, max_sum // 2, jobs))
    if jobs <= 1 or len(pieces) == 1:
        results = [_pair_chunk(seq, a, b, max_sum) for a, b in pieces]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futs = [pool.submit(_pair_chunk, seq, a, b, max_sum) for a, b in pieces]
            results = [f.result() for f in futs]
    viols = [p for vs, _ in results for p in vs]
    eqs = [p for _, es in results for p in es]
    threshold = (max(a + b for a, b in viols) + 1) if viols else 2
    return ScanReport(
        seq.label, "bessenrodt-ono", 1, max_sum, tuple(viols), tuple(eqs), threshold
    )
