import random
from fractions import Fraction

import pytest

from hyperpf.scalar import (
    LaurentPoly,
    Poly,
    decode_rational,
    double_factorial_even,
    double_factorial_odd,
    encode_scalar,
    exact_div,
    multinomial_central,
)


def rand_fraction(rnd):
    return Fraction(rnd.randint(-50, 50), rnd.randint(1, 30))


def test_ring_axioms_random_rationals():
    rnd = random.Random(7)
    for _ in range(200):
        a, b, c = (rand_fraction(rnd) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_rationals_always_reduced():
    rnd = random.Random(11)
    from math import gcd

    for _ in range(100):
        v = rand_fraction(rnd) * rand_fraction(rnd) + rand_fraction(rnd)
        assert gcd(v.numerator, v.denominator) == 1
        assert v.denominator > 0


def test_poly_basics():
    p = Poly((-1, 0, 1))  # y^2 - 1
    q = Poly((1, 1)) * Poly((-1, 1))
    assert q == p
    assert p(2) == 3
    assert p.degree == 2
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly().degree is None
    assert not Poly((0, 0))
    assert Poly((3,)) == 3
    assert Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2)


def test_poly_pow_and_shift():
    x = Poly.monomial(1)
    assert (x + 1) ** 3 == Poly((1, 3, 3, 1))
    assert x.shift(2) == Poly.monomial(3)
    assert (x**0) == Poly((1,))


def test_laurent_coefficient_examples():
    # (x + 1/x - 2c)^2 at j=0 is 2 + 4c^2, with c symbolic
    c = Poly.monomial(1)
    p = LaurentPoly(-1, (1, -2 * c, 1)) ** 2
    assert p.coefficient(0) == Poly((2, 0, 4))
    assert p.coefficient(-5) == 0  # below stored support
    # (x - y)^2 has monic leading coefficient in x
    y = Poly.monomial(1)
    q = LaurentPoly(0, (y * y, -2 * y, 1))
    assert q.coefficient(2) == 1


def test_laurent_normalization_and_ops():
    p = LaurentPoly(-2, (0, 1, 0, 3, 0))
    assert p.low == -1 and p.coeffs == (1, 0, 3)
    assert p.high == 1
    z = LaurentPoly(5, (0, 0))
    assert not z and z.low == 0
    a = LaurentPoly(-1, (1, 0, 1))
    assert a * a == LaurentPoly(-2, (1, 0, 2, 0, 1))
    assert a + (-a) == LaurentPoly()
    assert a.shift(3).low == 2


def test_laurent_product_coefficient_convolution():
    rnd = random.Random(3)
    for _ in range(50):
        p = LaurentPoly(rnd.randint(-4, 2), [rnd.randint(-5, 5) for _ in range(5)])
        q = LaurentPoly(rnd.randint(-3, 3), [rnd.randint(-5, 5) for _ in range(4)])
        pq = p * q
        for j in range(-10, 11):
            conv = sum(c * q.coefficient(j - k) for k, c in p.support())
            assert pq.coefficient(j) == conv


def test_multinomial_central():
    assert multinomial_central(16, 4) == 99561092450391000
    assert multinomial_central(16, 1) == 1
    assert multinomial_central(8, 1) == 1
    assert multinomial_central(4, 2) == 6  # 4!/(2! 2!)
    with pytest.raises(ValueError):
        multinomial_central(3, 2)
    with pytest.raises(ValueError):
        multinomial_central(4, 0)


def test_double_factorials():
    assert double_factorial_even(6) == 48
    assert double_factorial_even(0) == 1
    assert double_factorial_odd(5) == 15
    assert double_factorial_odd(-1) == 1
    with pytest.raises(ValueError):
        double_factorial_even(5)
    with pytest.raises(ValueError):
        double_factorial_odd(4)


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(13, 4)
    assert exact_div(Fraction(1, 2), 3) == Fraction(1, 6)
    assert exact_div(Poly((2, 4)), 2) == Poly((1, 2))
    assert exact_div(LaurentPoly(-1, (3, 6)), 3) == LaurentPoly(-1, (1, 2))


def test_encode_decode_round_trip():
    big = 12870 * 10**32 + 320320
    assert decode_rational(encode_scalar(big)) == big
    assert decode_rational(encode_scalar(Fraction(-3, 7))) == Fraction(-3, 7)
    assert encode_scalar(Poly((1, 0, -2))) == ["1", "0", "-2"]
