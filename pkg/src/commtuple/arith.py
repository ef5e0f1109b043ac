"""Arithmetic weight tables: divisor power sums, Dirichlet convolution,
and subgroup counts of free abelian groups.

An exponent spec selects the weight function f attached to the product
G(q) = prod_{n>=1} (1 - q^n)^{-f(n)}.  All tables are 1-indexed Python
lists with a zero sentinel stored at index 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class SubgroupCount:
    """f(n) = number of index-n subgroups of Z^rank."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be a positive integer")


@dataclass(frozen=True)
class Power:
    """f(n) = n^d."""

    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("d must be >= 0")


@dataclass(frozen=True)
class PolygonalIndicator:
    """f(n) = 1 if n is a k-gonal number, else 0."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ValueError("k must be >= 3")


@dataclass(frozen=True)
class TableExponent:
    """f given by an explicit value table (f(1), f(2), ...)."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError("table values must be >= 0")
        object.__setattr__(self, "values", vals)


ExponentSpec = SubgroupCount | Power | PolygonalIndicator | TableExponent


def divisor_power_sum(m: int, n: int) -> int:
    """sigma_m(n), the sum of d^m over positive divisors d | n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**m
            e = n // d
            if e != d:
                total += e**m
    return total


def dirichlet_convolve(a: list[int], b: list[int]) -> list[int]:
    """(a * b)(n) = sum_{d|n} a(d) b(n/d) on 1..N; inputs share a length."""
    if len(a) != len(b):
        raise ValueError("tables must cover the same range")
    n_max = len(a) - 1
    out = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        ad = a[d]
        if ad:
            for m in range(d, n_max + 1, d):
                out[m] += ad * b[m // d]
    return out


def power_value_table(p: int, n_max: int) -> list[int]:
    return [0] + [n**p for n in range(1, n_max + 1)]


def subgroup_count_table(ell: int, n_max: int) -> list[int]:
    """g_ell(n) for n = 1..n_max: index-n subgroups of Z^ell.

    Computed as the iterated Dirichlet convolution Id^0 * Id^1 * ... *
    Id^(ell-1); equivalently g_ell(n) = sum over diagonal Hermite forms
    of prod d_j^(j-1).
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    table = power_value_table(0, n_max)
    for p in range(1, ell):
        table = dirichlet_convolve(table, power_value_table(p, n_max))
    return table


def _ordered_factorizations(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for d in range(1, n + 1):
        if n % d == 0:
            for rest in _ordered_factorizations(n // d, parts - 1):
                yield (d,) + rest


def hnf_subgroup_count(ell: int, n: int) -> int:
    """Count index-n sublattices of Z^ell by enumerating Hermite normal
    forms one matrix at a time.

    Upper triangular, diagonal (d_1, ..., d_ell) with product n, and the
    entries above the diagonal in column j each range over 0..d_j - 1.
    Deliberately brute force; serves as the oracle for
    subgroup_count_table.
    """
    if not 1 <= ell <= 4:
        raise ValueError("ell must be in 1..4")
    if not 1 <= n <= 64:
        raise ValueError("n must be in 1..64")
    count = 0
    for diag in _ordered_factorizations(n, ell):
        cols = []
        for j in range(ell):
            # column j (0-based) has j entries above the diagonal
            cols.extend([range(diag[j])] * j)
        for _entries in itertools.product(*cols):
            count += 1
    return count


def is_polygonal(k: int, n: int) -> bool:
    """True iff n = m((k-2)m - (k-4))/2 for some integer m >= 1."""
    if k < 3:
        raise ValueError("k must be >= 3")
    if n < 1:
        return False
    disc = 8 * (k - 2) * n + (k - 4) ** 2
    r = isqrt(disc)
    if r * r != disc:
        return False
    num = r + k - 4
    den = 2 * (k - 2)
    return num % den == 0 and num // den >= 1


def evaluate_exponent(spec: ExponentSpec, n_max: int) -> list[int]:
    """Weight table (0, f(1), ..., f(n_max)) for an exponent spec."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if isinstance(spec, SubgroupCount):
        if n_max == 0:
            return [0]
        return subgroup_count_table(spec.rank, n_max)
    if isinstance(spec, Power):
        return power_value_table(spec.d, n_max)[: n_max + 1]
    if isinstance(spec, PolygonalIndicator):
        return [0] + [1 if is_polygonal(spec.k, n) else 0 for n in range(1, n_max + 1)]
    if isinstance(spec, TableExponent):
        if len(spec.values) < n_max:
            raise ValueError("table too short for requested range")
        return [0] + [spec.values[n - 1] for n in range(1, n_max + 1)]
    raise TypeError(f"unknown exponent spec {spec!r}")


def family_label(spec: ExponentSpec) -> str:
    """Short stable tag used in reports and CLI output."""
    if isinstance(spec, SubgroupCount):
        return f"subgroups-rank-{spec.rank}"
    if isinstance(spec, Power):
        return f"power-{spec.d}"
    if isinstance(spec, PolygonalIndicator):
        return f"polygonal-{spec.k}"
    if isinstance(spec, TableExponent):
        return f"table-{len(spec.values)}"
    raise TypeError(f"unknown exponent spec {spec!r}")
