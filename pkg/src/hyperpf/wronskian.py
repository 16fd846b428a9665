"""Complete monic polynomial families and their renormalized Wronskians.

The ell-th renormalized derivative is D^ell = (1/ell!) d^ell/dx^ell; the
renormalized Wronskian of the polynomials selected by an index set t is
det [D^ell p_{t(k)}], which differs from the classical Wronskian by the
product of the ell!.  For the monomial family the Wronskian collapses to
a single monomial

    Wr(m_t; x) = normalized_vandermonde(t) * x**(sum(t) - L*(L-1)/2).

Note the exponent carries the -L*(L-1)/2 shift: the x**sum(t) form seen
elsewhere drops it, but the determinant itself (see the test suite,
which checks every t against the general determinant path) forces the
shift, and only the shifted form is consistent with the circular
centering used downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exterior import Multivector
from .indexcomb import index_sum, normalized_vandermonde, subset_tuples
from .scalar import Poly

__all__ = [
    "PolynomialFamily",
    "monomial_family",
    "shifted_monomial_family",
    "hermite_family",
    "renorm_derivative",
    "wronskian",
    "monomial_wronskian",
    "derivative_blade",
    "vandermonde_power",
]


@dataclass(frozen=True)
class PolynomialFamily:
    """A complete family: monic p_0, ..., p_{N-1} with deg p_n = n."""

    name: str
    polys: tuple

    def __post_init__(self):
        for n, p in enumerate(self.polys):
            if p.degree != n or p.coeffs[-1] != 1:
                raise ValueError(f"family member {n} is not monic of degree {n}")

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, n):
        return self.polys[n]

    def to_json(self):
        return [[str(c) for c in p.coeffs] for p in self.polys]


def monomial_family(N):
    return PolynomialFamily("monomial", tuple(Poly.monomial(n) for n in range(N)))


def shifted_monomial_family(N, shift=Fraction(1, 2)):
    """(x - shift)**n, expanded; exercises family independence."""
    base = Poly((-shift, 1))
    return PolynomialFamily(f"shifted_monomial({shift})", tuple(base**n for n in range(N)))


def hermite_family(N):
    """Monic Hermite polynomials for the weight e^{-x^2/2}/sqrt(2*pi),
    via h_{n+1} = x*h_n - n*h_{n-1}."""
    polys = [Poly((1,))]
    if N > 1:
        polys.append(Poly((0, 1)))
    for n in range(1, N - 1):
        polys.append(polys[n].shift(1) - n * polys[n - 1])
    return PolynomialFamily("hermite", tuple(polys[:N]))


def renorm_derivative(p, ell):
    """D^ell p with exact coefficients: [D^ell p]_k = C(k+ell, ell) * [p]_{k+ell}."""
    if ell < 0:
        raise ValueError("derivative order must be >= 0")
    if ell == 0:
        return p
    return Poly(
        tuple(math.comb(k + ell, ell) * c for k, c in enumerate(p.coeffs[ell:]))
    )


def _det_poly(matrix):
    """Exact determinant of a small matrix of Poly entries.

    Laplace expansion memoized over column subsets; adequate for the
    L <= 8 sizes that occur.
    """
    n = len(matrix)
    memo = {}

    def minor(row, colmask):
        if row == n:
            return Poly((1,))
        known = memo.get((row, colmask))
        if known is not None:
            return known
        total = Poly()
        sign = 1
        m = colmask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            entry = matrix[row][j]
            if entry:
                sub = minor(row + 1, colmask ^ low)
                if sub:
                    term = entry * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
            m ^= low
        memo[(row, colmask)] = total
        return total

    return minor(0, (1 << n) - 1)


def wronskian(family, t):
    """Renormalized Wronskian det [D^ell p_{t(k)}] as an exact Poly."""
    t = tuple(t)
    L = len(t)
    matrix = [[renorm_derivative(family[k], ell) for k in t] for ell in range(L)]
    return _det_poly(matrix)


def monomial_wronskian(t):
    """Closed form for the monomial family: (coefficient, exponent) with
    Wr(m_t) = coefficient * x**exponent and exponent = sum(t) - L*(L-1)/2."""
    t = tuple(t)
    L = len(t)
    return normalized_vandermonde(t), index_sum(t) - L * (L - 1) // 2


def derivative_blade(family, L, x):
    """The grade-L blade p(x) ^ D^1 p(x) ^ ... ^ D^{L-1} p(x).

    Coefficients are the Grassmann coordinates, i.e. the Wronskians
    Wr(p_t; x) over all L-subsets t, evaluated exactly at x.
    """
    N = len(family)
    columns = [[renorm_derivative(p, ell)(x) for p in family.polys] for ell in range(L)]
    terms = {}
    for t in subset_tuples(N, L):
        val = _det_scalar([[columns[ell][k] for k in t] for ell in range(L)])
        if val:
            mask = 0
            for i in t:
                mask |= 1 << i
            terms[mask] = val
    return Multivector(N, L, terms)


def _det_scalar(matrix):
    """Exact determinant of a small scalar matrix (Laplace, memoized)."""
    n = len(matrix)
    memo = {}

    def minor(row, colmask):
        if row == n:
            return 1
        known = memo.get((row, colmask))
        if known is not None:
            return known
        total = 0
        sign = 1
        m = colmask
        while m:
            low = m & -m
            j = low.bit_length() - 1
            entry = matrix[row][j]
            if entry:
                sub = minor(row + 1, colmask ^ low)
                if sub:
                    total = total + sign * entry * sub
            sign = -sign
            m ^= low
        memo[(row, colmask)] = total
        return total

    return minor(0, (1 << n) - 1)


def vandermonde_power(xs, L):
    """Direct product prod_{m<n} (x_n - x_m)**(L*L), exactly."""
    out = 1
    xs = list(xs)
    for m in range(len(xs)):
        for n in range(m + 1, len(xs)):
            out *= (xs[n] - xs[m]) ** (L * L)
    return out
