import itertools
import random
from fractions import Fraction
from math import comb

from hyperpf.exterior import star_top, wedge
from hyperpf.indexcomb import subset_tuples
from hyperpf.moments import gaussian_weight
from hyperpf.scalar import Poly
from hyperpf.wronskian import (
    derivative_blade,
    hermite_family,
    monomial_family,
    monomial_wronskian,
    renorm_derivative,
    shifted_monomial_family,
    vandermonde_power,
    wronskian,
)


def test_renorm_derivative():
    x2 = Poly.monomial(2)
    assert renorm_derivative(x2, 1) == Poly((0, 2))
    assert renorm_derivative(x2, 2) == Poly((1,))
    assert renorm_derivative(x2, 3) == Poly()
    p = Poly((1, 2, 3, 4))
    assert renorm_derivative(p, 1) == Poly((2, 6, 12))


def test_renorm_product_rule():
    # D^l(fg) = sum_j D^j f * D^(l-j) g
    rnd = random.Random(6)
    for _ in range(30):
        f = Poly([rnd.randint(-4, 4) for _ in range(rnd.randint(1, 6))])
        g = Poly([rnd.randint(-4, 4) for _ in range(rnd.randint(1, 6))])
        for ell in range(5):
            lhs = renorm_derivative(f * g, ell)
            rhs = Poly()
            for j in range(ell + 1):
                rhs = rhs + renorm_derivative(f, j) * renorm_derivative(g, ell - j)
            assert lhs == rhs


def test_wronskian_examples():
    fam = monomial_family(6)
    assert wronskian(fam, (0, 1)) == Poly((1,))
    assert wronskian(fam, (0, 1, 2)) == Poly((1,))
    assert wronskian(fam, (0, 2)) == Poly((0, 2))


def test_monomial_wronskian_matches_determinant():
    # exponent carries the -L(L-1)/2 shift; check every subset
    for N, L in [(12, 2), (8, 3), (12, 4)]:
        fam = monomial_family(N)
        for t in subset_tuples(N, L):
            coeff, exponent = monomial_wronskian(t)
            assert wronskian(fam, t) == Poly.monomial(exponent, coeff)
            assert exponent == sum(t) - L * (L - 1) // 2


def test_scalar_multiple_wronskian_lemma():
    # Wr(g f_1, ..., g f_L) = g^L Wr(f_1, ..., f_L)
    rnd = random.Random(8)
    L = 3
    for _ in range(15):
        g = Poly([rnd.randint(-3, 3) for _ in range(3)] + [1])
        fs = [Poly.monomial(n) for n in rnd.sample(range(6), L)]
        matrix = [[renorm_derivative(g * f, ell) for f in fs] for ell in range(L)]
        lhs = _det(matrix)
        rhs = g**L * _det([[renorm_derivative(f, ell) for f in fs] for ell in range(L)])
        assert lhs == rhs


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Poly()
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        term = m[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_hermite_family():
    fam = hermite_family(7)
    assert fam[2] == Poly((-1, 0, 1))
    assert fam[3] == Poly((0, -3, 0, 1))
    w = gaussian_weight()
    for m in range(6):
        for n in range(6):
            val = w.integrate_poly(fam[m] * fam[n])
            if m != n:
                assert val == 0
            else:
                assert val != 0


def test_families_are_monic_complete():
    for fam in (monomial_family(6), hermite_family(6), shifted_monomial_family(6)):
        for n in range(6):
            assert fam[n].degree == n
            assert fam[n].coeffs[-1] == 1


def test_derivative_blade_grade1():
    fam = hermite_family(4)
    x = Fraction(1, 2)
    blade = derivative_blade(fam, 1, x)
    assert blade.items() == [
        ((n,), fam[n](x)) for n in range(4) if fam[n](x)
    ]


def test_derivative_blade_monomials_at_zero():
    # only index sets whose Wronskian exponent is zero survive at x = 0
    fam = monomial_family(6)
    blade = derivative_blade(fam, 2, Fraction(0))
    for t, coeff in blade.items():
        c, e = monomial_wronskian(t)
        assert e == 0 and coeff == c
    assert blade.coefficient((0, 1)) == 1


def test_blade_squared_is_zero():
    fam = monomial_family(8)
    blade = derivative_blade(fam, 2, Fraction(2, 3))
    assert not wedge(blade, blade)


def test_confluent_vandermonde_small_grid():
    rnd = random.Random(12)
    for L, M in [(2, 2), (2, 3), (4, 2)]:
        N = L * M
        for fam in (monomial_family(N), hermite_family(N), shifted_monomial_family(N)):
            xs = []
            while len(set(xs)) != M:
                xs = [Fraction(rnd.randint(-6, 6), rnd.randint(1, 4)) for _ in range(M)]
            acc = derivative_blade(fam, L, xs[0])
            for x in xs[1:]:
                acc = wedge(acc, derivative_blade(fam, L, x))
            assert star_top(acc) == vandermonde_power(xs, L)


def test_vandermonde_power_examples():
    assert vandermonde_power((0, 1), 2) == 1
    assert vandermonde_power((0, 1, 2), 2) == 16
    assert vandermonde_power((Fraction(1, 2), Fraction(1, 2)), 2) == 0
