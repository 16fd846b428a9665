"""Combinatorics of L-element index sets inside [0, N).

Index sets are strictly increasing tuples of integers; each carries a
bitmask twin (bit i set iff i is a member) so that downstream
disjointness tests and sign merges reduce to integer bit operations.
Enumeration is always lexicographic, so every downstream result is
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "IndexSet",
    "mask_of",
    "indices_of",
    "index_sum",
    "centered_sum",
    "normalized_vandermonde",
    "subsets",
    "subset_tuples",
    "zero_sum_multisets",
    "arrangement_count",
]


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class IndexSet:
    """Validated L-subset of [0, N): increasing tuple + bitmask twin."""

    indices: tuple
    mask: int

    @classmethod
    def of(cls, iterable, N=None):
        t = tuple(iterable)
        if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
            raise ValueError(f"indices must be strictly increasing: {t}")
        if t and t[0] < 0:
            raise ValueError(f"indices must be non-negative: {t}")
        if N is not None and t and t[-1] >= N:
            raise ValueError(f"index {t[-1]} out of range [0, {N})")
        return cls(t, mask_of(t))

    @classmethod
    def from_mask(cls, mask):
        return cls(indices_of(mask), mask)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __str__(self):
        return "{" + ",".join(str(i) for i in self.indices) + "}"


def index_sum(t):
    """Sum of the members of an index set (tuple or IndexSet)."""
    return sum(tuple(t))


def centered_sum(t, Nprime):
    """Offset of the index sum from its mean L*(N'-1)/2 over L-subsets of [0, N').

    Requires L*(N'-1) even (guaranteed for even L) so the offset is an
    integer.
    """
    t = tuple(t)
    L = len(t)
    twice = L * (Nprime - 1)
    if twice % 2:
        raise ValueError(f"L*(N'-1) = {twice} is odd; offset would be half-integral")
    return sum(t) - twice // 2


def normalized_vandermonde(t):
    """The integer prod_{j<k} (t(k)-t(j))/(k-j).

    Computed exactly as a single quotient; a non-integral result would
    indicate corrupted input and fails loudly.
    """
    t = tuple(t)
    L = len(t)
    num = 1
    den = 1
    for j in range(L):
        for k in range(j + 1, L):
            num *= t[k] - t[j]
            den *= k - j
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral normalized Vandermonde for {t}")
    return q


def subset_tuples(N, L, index_sum=None, max_abs_offset=None):
    """Yield the L-subsets of [0, N) as increasing tuples, lexicographically.

    ``index_sum`` keeps only subsets with the given element sum;
    ``max_abs_offset`` keeps those with |centered sum| <= bound.  Both
    constraints prune by attainable partial-sum bounds rather than
    filtering after generation.
    """
    if L < 0 or L > N:
        return
    if index_sum is None and max_abs_offset is None:
        lo_target, hi_target = None, None
    elif index_sum is not None:
        lo_target = hi_target = index_sum
    else:
        center2 = L * (N - 1)
        if center2 % 2:
            raise ValueError("centered-sum constraint needs L*(N-1) even")
        lo_target = center2 // 2 - max_abs_offset
        hi_target = center2 // 2 + max_abs_offset

    out = [0] * L

    def rec(pos, start, acc):
        remaining = L - pos
        if remaining == 0:
            if lo_target is None or lo_target <= acc <= hi_target:
                yield tuple(out)
            return
        for v in range(start, N - remaining + 1):
            if lo_target is not None:
                tail_min = acc + v * remaining + remaining * (remaining - 1) // 2
                if tail_min > hi_target:
                    break
                tail_max = acc + v + sum(range(N - remaining + 1, N))
                if tail_max < lo_target:
                    continue
            out[pos] = v
            yield from rec(pos + 1, v + 1, acc + v)

    yield from rec(0, 0, 0)


def subsets(N, L, index_sum=None, max_abs_offset=None):
    """Like ``subset_tuples`` but yields validated IndexSet values."""
    for t in subset_tuples(N, L, index_sum=index_sum, max_abs_offset=max_abs_offset):
        yield IndexSet(t, mask_of(t))


def zero_sum_multisets(count, bound):
    """Yield weakly increasing integer tuples of the given length with
    entries in [-bound, bound] summing to zero, lexicographically."""
    if count < 0:
        raise ValueError("count must be >= 0")
    out = [0] * count

    def rec(pos, lo, total):
        remaining = count - pos
        if remaining == 0:
            if total == 0:
                yield tuple(out)
            return
        # v*remaining <= -total <= v + bound*(remaining-1) bounds each branch
        v_min = max(lo, -bound, -total - bound * (remaining - 1))
        v_max = min(bound, (-total) // remaining)
        for v in range(v_min, v_max + 1):
            out[pos] = v
            yield from rec(pos + 1, v, total + v)

    yield from rec(0, -bound, 0)


def arrangement_count(values):
    """Number of distinct orderings of a multiset (tuple of values)."""
    values = tuple(values)
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    out = math.factorial(len(values))
    for c in counts.values():
        out //= math.factorial(c)
    return out
