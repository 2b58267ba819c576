"""Brute-force partition enumeration and hook statistics.

Everything here works directly on Ferrers-Young diagrams and is meant as
ground truth for the generating-function machinery in :mod:`hooklens.series`.
Enumeration is practical up to roughly n = 45 (p(45) = 89134).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from hooklens.zetapoly import ZetaPoly

__all__ = [
    "Partition",
    "HookMultiset",
    "enumerate_partitions",
    "conjugate",
    "hook_lengths",
    "hook_multiset",
    "hook_count_poly_oracle",
    "partition_number",
    "partition_numbers",
    "residue_count_oracle",
    "hook_residue_total",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(conjugate(self.parts))


@dataclass(frozen=True)
class HookMultiset:
    """Multiplicities of hook lengths over all cells of one diagram."""

    counts: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {int(h): int(c) for h, c in sorted(self.counts.items()) if c}
        if any(h < 1 or c < 0 for h, c in clean.items()):
            raise ValueError(f"invalid hook multiset {clean}")
        object.__setattr__(self, "counts", clean)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, length: int) -> int:
        return self.counts.get(length, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HookMultiset):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self) -> int:
        return hash(tuple(self.counts.items()))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in lexicographically decreasing order.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _partitions_bounded(n, n):
        yield Partition(parts)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Column lengths of the diagram, computed from row lengths."""
    if not parts:
        return ()
    cols = []
    k = len(parts)
    for j in range(1, parts[0] + 1):
        while parts[k - 1] < j:
            k -= 1
        cols.append(k)
    return tuple(cols)


def hook_lengths(parts: Sequence[int]) -> Iterator[int]:
    """Hook length (lambda_k - k) + (lambda'_j - j) + 1 for every cell (k, j)."""
    cols = conjugate(parts)
    for k, row in enumerate(parts, start=1):
        for j in range(1, row + 1):
            yield (row - k) + (cols[j - 1] - j) + 1


def hook_multiset(partition: Partition | Sequence[int]) -> HookMultiset:
    parts = partition.parts if isinstance(partition, Partition) else tuple(partition)
    return HookMultiset(Counter(hook_lengths(parts)))


@lru_cache(maxsize=None)
def _hook_profiles(n: int) -> tuple[Counter, ...]:
    # One Counter per partition of n; shared by every per-ell query below.
    return tuple(Counter(hook_lengths(p)) for p in _partitions_bounded(n, n))


def hook_count_poly_oracle(ell: int, n: int) -> ZetaPoly:
    """Sum over partitions of n of zeta**(number of hooks of length exactly ell)."""
    if ell < 1:
        raise ValueError("ell must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    tally = Counter(profile[ell] for profile in _hook_profiles(n))
    coeffs = [0] * (max(tally) + 1)
    for m, c in tally.items():
        coeffs[m] = c
    return ZetaPoly(coeffs)


@lru_cache(maxsize=None)
def _partition_number_table(limit: int) -> tuple[int, ...]:
    table = [1] + [0] * limit
    for m in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * table[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * table[m - g2]
            k += 1
        table[m] = total
    return tuple(table)


def partition_numbers(limit: int) -> tuple[int, ...]:
    """p(0), ..., p(limit) by Euler's pentagonal-number recurrence."""
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    # Round the cache key up so repeated small queries share one table.
    size = max(64, 1 << (limit.bit_length()))
    return _partition_number_table(size)[: limit + 1]


def partition_number(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return partition_numbers(n)[n]


def residue_count_oracle(ell: int, b: int, a: int, n: int) -> int:
    """#{lambda |- n : (number of ell-hooks of lambda) = a mod b}, by enumeration."""
    if b < 2:
        raise ValueError("modulus b must be at least 2")
    if not 0 <= a < b:
        raise ValueError(f"residue a must lie in [0, {b})")
    if ell < 1:
        raise ValueError("ell must be positive")
    return sum(1 for profile in _hook_profiles(n) if profile[ell] % b == a)


def hook_residue_total(b: int, a: int, n: int) -> int:
    """Total number of cells, over all partitions of n, whose hook length is a mod b.

    Exploratory statistic only; it does not sum to p(n) over residues.
    """
    if b < 1 or not 0 <= a < b:
        raise ValueError("need b >= 1 and 0 <= a < b")
    return sum(
        c for profile in _hook_profiles(n) for h, c in profile.items() if h % b == a
    )
