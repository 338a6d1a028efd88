"""Exact B_k[g] checks by counting multiset representations.

A set A is B_k[g] when every value has at most g representations as a sum of
k elements of A counted as multisets. ``min_g`` returns the least such g.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

import numpy as np

DEFAULT_CAP = 10**8
DENSE_LIMIT = 10**7


class CapExceededError(ValueError):
    """The requested enumeration is larger than the configured cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} multisets exceed the cap of {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True)
class GroupSpec:
    """The integers (``modulus is None``) or the cyclic group Z_m."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and not 2 <= self.modulus < 2**64:
            raise ValueError(f"cyclic modulus {self.modulus} must be in [2, 2^64)")

    @classmethod
    def cyclic(cls, m: int) -> GroupSpec:
        return cls(int(m))

    @property
    def is_cyclic(self) -> bool:
        return self.modulus is not None

    def to_json(self):
        return "integers" if self.modulus is None else {"cyclic": self.modulus}

    @classmethod
    def from_json(cls, obj) -> GroupSpec:
        if obj == "integers" or obj is None:
            return cls()
        if isinstance(obj, dict) and set(obj) == {"cyclic"}:
            return cls.cyclic(obj["cyclic"])
        raise ValueError(f"unrecognised group {obj!r}")


INTEGERS = GroupSpec()


@dataclass(frozen=True)
class CandidateSet:
    elements: tuple[int, ...]
    k: int
    g: int = 1
    group: GroupSpec = INTEGERS

    def __post_init__(self):
        elems = tuple(sorted(int(a) for a in self.elements))
        if len(set(elems)) != len(elems):
            raise ValueError("elements must be distinct")
        if self.k < 2:
            raise ValueError(f"k={self.k} must be >= 2")
        if self.g < 1:
            raise ValueError(f"g={self.g} must be >= 1")
        m = self.group.modulus
        if m is not None and elems and (elems[0] < 0 or elems[-1] >= m):
            raise ValueError(f"residues must lie in [0, {m})")
        object.__setattr__(self, "elements", elems)

    def __len__(self):
        return len(self.elements)

    def multiset_count(self) -> int:
        return comb(len(self.elements) + self.k - 1, self.k)


@dataclass
class SumProfile:
    """Number of size-k multisets attaining each sum (or residue)."""

    counts: dict[int, int]
    max_count: int = 0
    argmax_sums: list[int] = field(default_factory=list)

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> SumProfile:
        if not counts:
            return cls({}, 0, [])
        top = max(counts.values())
        return cls(counts, top, sorted(s for s, c in counts.items() if c == top))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def collisions(self, g: int) -> list[int]:
        """Sums whose count exceeds ``g``."""
        return sorted(s for s, c in self.counts.items() if c > g)


def _check_cap(count: int, cap: int) -> None:
    if count > cap:
        raise CapExceededError(count, cap)
    if count >= 2**63:
        raise OverflowError("multiset count does not fit signed 64-bit counters")


def _dense_counts(offsets: np.ndarray, k: int, width: int, modulus: int | None) -> np.ndarray:
    # rows[j][s]: number of size-j multisets with sum s; adding elements one at
    # a time and sweeping j upward lets each element repeat any number of times
    rows = np.zeros((k + 1, width), dtype=np.int64)
    rows[0, 0] = 1
    for a in offsets:
        a = int(a)
        for j in range(1, k + 1):
            if modulus is None:
                if a:
                    rows[j, a:] += rows[j - 1, : width - a]
                else:
                    rows[j] += rows[j - 1]
            else:
                rows[j] += np.roll(rows[j - 1], a)
    return rows[k]


def _sparse_counts(elements, k: int, modulus: int | None) -> dict[int, int]:
    rows = [defaultdict(int) for _ in range(k + 1)]
    rows[0][0] = 1
    for a in elements:
        for j in range(1, k + 1):
            prev = rows[j - 1]
            row = rows[j]
            for s, c in list(prev.items()):
                t = s + a
                if modulus is not None:
                    t %= modulus
                row[t] += c
    return dict(rows[k])


def sum_profile(A: CandidateSet, cap: int = DEFAULT_CAP) -> SumProfile:
    """Exact sum counts for all size-k multisets from ``A``."""
    _check_cap(A.multiset_count(), cap)
    if not A.elements:
        return SumProfile.from_counts({})
    k, m = A.k, A.group.modulus
    elems = A.elements
    if m is None:
        base = elems[0]
        span = elems[-1] - base
        width = k * span + 1
        if width <= DENSE_LIMIT:
            counts = _dense_counts(np.array(elems, dtype=np.int64) - base, k, width, None)
            nz = np.flatnonzero(counts)
            return SumProfile.from_counts(
                {int(s) + k * base: int(counts[s]) for s in nz})
        return SumProfile.from_counts(_sparse_counts(elems, k, None))
    if m <= DENSE_LIMIT:
        counts = _dense_counts(np.array(elems, dtype=np.int64), k, m, m)
        nz = np.flatnonzero(counts)
        return SumProfile.from_counts({int(s): int(counts[s]) for s in nz})
    return SumProfile.from_counts(_sparse_counts(elems, k, m))


def naive_sum_profile(A: CandidateSet) -> SumProfile:
    """Reference enumeration of non-decreasing k-tuples."""
    m = A.group.modulus
    counts = Counter()
    for combo in combinations_with_replacement(A.elements, A.k):
        s = sum(combo)
        counts[s % m if m is not None else s] += 1
    return SumProfile.from_counts(dict(counts))


def min_g(A: CandidateSet, cap: int = DEFAULT_CAP) -> int:
    """Least g for which ``A`` is B_k[g]; 0 for the empty set."""
    return sum_profile(A, cap).max_count


def is_bkg(A: CandidateSet, cap: int = DEFAULT_CAP) -> bool:
    return min_g(A, cap) <= A.g


def difference_profile(A: CandidateSet, proper: bool = True,
                       cap: int = DEFAULT_CAP) -> SumProfile:
    """Counts of c = sum(P) - sum(Q) over multiset pairs (P, Q) from ``A``.

    ``|P| = ceil(k/2)`` and ``|Q| = floor(k/2)``. With ``proper`` only pairs
    with no element in common are counted; for a B_k[1] set each value then
    has at most one representation. Without it every pair counts, including
    the trivial ones such as a - a = 0.
    """
    if A.group.is_cyclic:
        raise ValueError("difference profiles are defined over the integers")
    hi, lo = (A.k + 1) // 2, A.k // 2
    size = len(A.elements)
    _check_cap(comb(size + hi - 1, hi) * comb(size + lo - 1, lo), cap)
    elems = A.elements
    if not proper:
        # convolve the two one-sided profiles
        left = _sparse_counts(elems, hi, None)
        right = _sparse_counts(elems, lo, None)
        counts = defaultdict(int)
        for s, c in left.items():
            for t, d in right.items():
                counts[s - t] += c * d
        return SumProfile.from_counts(dict(counts))
    counts = Counter()
    rights = [(frozenset(q), sum(q)) for q in combinations_with_replacement(elems, lo)]
    for p in combinations_with_replacement(elems, hi):
        ps = set(p)
        sp = sum(p)
        for qs, sq in rights:
            if ps.isdisjoint(qs):
                counts[sp - sq] += 1
    return SumProfile.from_counts(dict(counts))
