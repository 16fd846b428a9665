import random
from fractions import Fraction

import pytest

from hyperpf.exterior import (
    Multivector,
    hyperpfaffian,
    merge_sign,
    pfaffian_classical,
    star_top,
    wedge,
    wedge_power_star,
)
from hyperpf.indexcomb import mask_of, subset_tuples
from hyperpf.oracle import det_exact


def test_merge_sign_examples():
    assert merge_sign((0, 1), (2, 3)) == 1
    assert merge_sign((0, 2), (1, 3)) == -1
    assert merge_sign((0, 1), (1, 2)) == 0
    assert merge_sign(0b11, 0b1100) == 1


def test_merge_sign_brute_force():
    # parity of inversions when concatenating and sorting
    rnd = random.Random(2)
    for _ in range(200):
        pool = rnd.sample(range(12), rnd.randint(2, 8))
        k = rnd.randint(1, len(pool) - 1)
        t = tuple(sorted(pool[:k]))
        u = tuple(sorted(pool[k:]))
        inv = sum(1 for a in t for b in u if a > b)
        assert merge_sign(t, u) == (-1) ** inv


def rand_mv(rnd, N, grade, nterms, lo=-9, hi=9):
    terms = {}
    keys = list(subset_tuples(N, grade))
    for t in rnd.sample(keys, min(nterms, len(keys))):
        terms[mask_of(t)] = rnd.randint(lo, hi)
    return Multivector(N, grade, terms)


def test_wedge_examples():
    e01 = Multivector.from_indexed(4, 2, [((0, 1), 1)])
    e23 = Multivector.from_indexed(4, 2, [((2, 3), 1)])
    assert wedge(e01, e23).items() == [((0, 1, 2, 3), 1)]
    alpha = e01 + e23
    assert wedge(alpha, alpha).items() == [((0, 1, 2, 3), 2)]
    v = Multivector.from_indexed(4, 1, [((0,), 2), ((2,), 5)])
    assert not wedge(v, v)


def test_wedge_graded_anticommutativity_and_associativity():
    rnd = random.Random(4)
    for _ in range(30):
        N = 8
        ga, gb, gc = 1, 2, 3
        a, b, c = rand_mv(rnd, N, ga, 4), rand_mv(rnd, N, gb, 5), rand_mv(rnd, N, gc, 5)
        ab = wedge(a, b)
        ba = wedge(b, a)
        sign = (-1) ** (ga * gb)
        assert ab == sign * ba
        assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_star_top():
    assert star_top(Multivector.from_indexed(2, 2, [((0, 1), 5)])) == 5
    assert star_top(Multivector(2, 2, {})) == 0
    e1 = Multivector.from_indexed(2, 1, [((1,), 1)])
    e0 = Multivector.from_indexed(2, 1, [((0,), 1)])
    assert star_top(wedge(e1, e0)) == -1
    with pytest.raises(ValueError):
        star_top(e0)


def test_hyperpfaffian_diagonal_and_all_ones():
    for M in range(1, 6):
        cs = [k + 2 for k in range(M)]
        diag = Multivector.from_indexed(
            2 * M, 2, [((2 * k, 2 * k + 1), cs[k]) for k in range(M)]
        )
        prod = 1
        for c in cs:
            prod *= c
        assert hyperpfaffian(diag, M) == prod
        ones = Multivector(2 * M, 2, {mask_of(t): 1 for t in subset_tuples(2 * M, 2)})
        assert hyperpfaffian(ones, M) == 1


def test_hyperpfaffian_classical_expansion():
    rnd = random.Random(9)
    for _ in range(20):
        a = {t: rnd.randint(-9, 9) for t in subset_tuples(4, 2)}
        mv = Multivector.from_indexed(4, 2, list(a.items()))
        expect = (
            a[(0, 1)] * a[(2, 3)] - a[(0, 2)] * a[(1, 3)] + a[(0, 3)] * a[(1, 2)]
        )
        assert hyperpfaffian(mv, 2) == expect


def mv_from_matrix(rows):
    n = len(rows)
    return Multivector.from_indexed(
        n, 2, [((i, j), rows[i][j]) for i in range(n) for j in range(i + 1, n)]
    )


def rand_antisymmetric(rnd, n):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rnd.randint(-9, 9), rnd.randint(1, 5))
            rows[i][j] = v
            rows[j][i] = -v
    return rows


def test_grade2_hyperpfaffian_matches_classical_and_det():
    rnd = random.Random(17)
    for n in (2, 4, 6, 8):
        for _ in range(10):
            rows = rand_antisymmetric(rnd, n)
            pf = pfaffian_classical(rows)
            assert hyperpfaffian(mv_from_matrix(rows), n // 2) == pf
            assert pf * pf == det_exact(rows)


def test_pfaffian_validation():
    with pytest.raises(ValueError):
        pfaffian_classical([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pfaffian_classical([[1, 1], [-1, 0]])
    with pytest.raises(ValueError):
        pfaffian_classical([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    assert pfaffian_classical([]) == 1


def test_odd_grade_wedge_power_vanishes():
    rnd = random.Random(21)
    for N, g in [(6, 3), (4, 1), (8, 1)]:
        M = N // g
        w = rand_mv(rnd, N, g, 6)
        assert wedge_power_star(w, M) == 0
    with pytest.raises(ValueError):
        hyperpfaffian(rand_mv(rnd, 6, 3, 4), 2)


def test_hyperpfaffian_shape_checks():
    mv = Multivector.from_indexed(4, 2, [((0, 1), 1)])
    with pytest.raises(ValueError):
        hyperpfaffian(mv, 3)
    with pytest.raises(ValueError):
        wedge(mv, Multivector.from_indexed(6, 2, [((0, 1), 1)]))


def test_determinism_under_insertion_order():
    rnd = random.Random(33)
    pairs = [(t, rnd.randint(-5, 5)) for t in subset_tuples(8, 2)]
    a = Multivector.from_indexed(8, 2, pairs)
    b = Multivector.from_indexed(8, 2, list(reversed(pairs)))
    assert a == b
    assert wedge_power_star(a, 4) == wedge_power_star(b, 4)


def test_multivector_algebra_and_json():
    a = Multivector.from_indexed(4, 2, [((0, 1), 2), ((1, 2), -1)])
    b = Multivector.from_indexed(4, 2, [((0, 1), -2)])
    assert (a + b).items() == [((1, 2), -1)]
    assert (3 * a).coefficient((0, 1)) == 6
    d = a.to_json_dict()
    assert d["N"] == 4 and d["grade"] == 2
    assert d["terms"] == [
        {"indices": [0, 1], "coeff": "2"},
        {"indices": [1, 2], "coeff": "-1"},
    ]
    with pytest.raises(ValueError):
        Multivector(4, 2, {0b111: 1})
