import itertools
import math
import random

import pytest

from hyperpf.indexcomb import (
    IndexSet,
    arrangement_count,
    centered_sum,
    index_sum,
    indices_of,
    mask_of,
    normalized_vandermonde,
    subset_tuples,
    subsets,
    zero_sum_multisets,
)


def brute_subsets(N, L):
    return list(itertools.combinations(range(N), L))


def test_index_sum():
    assert index_sum((0, 1, 2, 3)) == 6
    assert index_sum((0, 2, 5)) == 7
    assert index_sum(()) == 0


def test_centered_sum():
    assert centered_sum((0, 1, 2, 3), 8) == -8
    assert centered_sum((2, 3, 4, 5), 8) == 0
    assert centered_sum((4, 5, 6, 7), 8) == 8
    with pytest.raises(ValueError):
        centered_sum((0, 1, 2), 8)  # odd L * odd (N'-1)


def test_normalized_vandermonde():
    assert normalized_vandermonde((0, 1, 2, 3)) == 1
    assert normalized_vandermonde((0, 2)) == 2
    assert normalized_vandermonde((0, 2, 3)) == 3
    # always a positive integer; 1 exactly on consecutive blocks
    for t in brute_subsets(9, 3):
        v = normalized_vandermonde(t)
        direct = math.prod(
            (t[k] - t[j]) for j in range(3) for k in range(j + 1, 3)
        ) / math.prod((k - j) for j in range(3) for k in range(j + 1, 3))
        assert v == direct > 0
        consecutive = all(t[i + 1] == t[i] + 1 for i in range(2))
        assert (v == 1) == consecutive


def test_subset_enumeration_counts_and_order():
    for N in range(0, 12):
        for L in range(0, min(N, 6) + 1):
            got = list(subset_tuples(N, L))
            assert got == brute_subsets(N, L)
    assert len(list(subset_tuples(4, 2))) == 6
    assert list(subset_tuples(4, 4)) == [(0, 1, 2, 3)]


def test_subset_sum_constraint_matches_filter():
    for N, L in [(8, 4), (10, 3), (7, 2)]:
        all_subs = brute_subsets(N, L)
        for s in range(0, L * N):
            want = [t for t in all_subs if sum(t) == s]
            assert list(subset_tuples(N, L, index_sum=s)) == want
    assert len(list(subset_tuples(8, 4, index_sum=14))) == 8


def test_subset_offset_constraint_matches_filter():
    for N, L in [(8, 4), (10, 2)]:
        all_subs = brute_subsets(N, L)
        for d in range(0, 9):
            want = [t for t in all_subs if abs(centered_sum(t, N)) <= d]
            assert list(subset_tuples(N, L, max_abs_offset=d)) == want


def test_indexset_validation_and_text():
    s = IndexSet.of([0, 2, 5])
    assert str(s) == "{0,2,5}"
    assert s.mask == 0b100101
    assert len(s) == 3
    assert IndexSet.from_mask(0b100101) == s
    with pytest.raises(ValueError):
        IndexSet.of([0, 2, 2])
    with pytest.raises(ValueError):
        IndexSet.of([3, 1])
    with pytest.raises(ValueError):
        IndexSet.of([0, 9], N=8)
    assert [tuple(t) for t in subsets(4, 2)] == brute_subsets(4, 2)


def test_mask_round_trip():
    rnd = random.Random(5)
    for _ in range(100):
        t = tuple(sorted(rnd.sample(range(20), rnd.randint(0, 6))))
        assert indices_of(mask_of(t)) == t


def test_zero_sum_multisets():
    assert list(zero_sum_multisets(0, 16)) == [()]
    assert list(zero_sum_multisets(1, 16)) == [(0,)]
    assert list(zero_sum_multisets(2, 2)) == [(-2, 2), (-1, 1), (0, 0)]
    # exhaustive cross-check against filtering ordered tuples
    for count, bound in [(2, 4), (3, 3), (3, 4)]:
        want = sorted(
            {
                tuple(sorted(v))
                for v in itertools.product(range(-bound, bound + 1), repeat=count)
                if sum(v) == 0
            }
        )
        assert list(zero_sum_multisets(count, bound)) == want


def test_arrangement_count():
    assert arrangement_count((0, 0)) == 1
    assert arrangement_count((-1, 1)) == 2
    assert arrangement_count((-2, 0, 1, 1)) == 12
    # total multiplicity equals the number of ordered zero-sum tuples
    for count, bound in [(2, 4), (3, 4), (3, 3)]:
        ordered = sum(
            1
            for v in itertools.product(range(-bound, bound + 1), repeat=count)
            if sum(v) == 0
        )
        assert sum(arrangement_count(j) for j in zero_sum_multisets(count, bound)) == ordered
