"""Gram L-vectors: the partition-function multivector and its pinned forms.

The Gram vector of an ensemble is the grade-L multivector whose
coefficient at an index set t is the weight-integral of the renormalized
Wronskian Wr(p_t); its hyperpfaffian is the partition function.  Pinning
m particle positions y_1..y_m multiplies the integrand by
prod_j (x - y_j)^beta and shrinks the ambient dimension to L*(M-m).

Circular ensembles integrate against Haar measure on the unit circle;
the ensemble weight contributes the exponent shift x^(-beta*(M-1)/2).
The accompanying unimodular constant is a power of i whose total
contribution to any hyperpfaffian is i^(M*(M-1)*beta/2) = 1 for the
even-square beta treated here (asserted below), so it is dropped from
the coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exterior import Multivector
from .indexcomb import (
    centered_sum,
    index_sum,
    mask_of,
    normalized_vandermonde,
    subset_tuples,
)
from .moments import MomentFunctional, circular_weight
from .scalar import LaurentPoly, Poly
from .wronskian import PolynomialFamily, monomial_family, wronskian

__all__ = [
    "EnsembleSpec",
    "gram_vector",
    "offset_vector",
    "pinned_gram_symbolic",
    "pinned_gram_points",
    "max_offset",
]


@dataclass(frozen=True)
class EnsembleSpec:
    """An M-particle ensemble with interaction exponent beta = L*L."""

    L: int
    M: int
    weight: MomentFunctional
    family: PolynomialFamily

    def __post_init__(self):
        if self.L < 2 or self.L % 2:
            raise ValueError(f"L must be a positive even integer, got {self.L}")
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if len(self.family) != self.L * self.M:
            raise ValueError(
                f"family length {len(self.family)} != L*M = {self.L * self.M}"
            )

    @property
    def beta(self):
        return self.L * self.L

    @property
    def N(self):
        return self.L * self.M

    @classmethod
    def circular(cls, L, M):
        return cls(L, M, circular_weight(), monomial_family(L * M))


def _assert_unit_total_phase(beta, M):
    # total phase over M particles is i**(M*(M-1)*beta/2); must be 1
    exponent = M * (M - 1) * beta // 2
    assert exponent % 4 == 0, f"total circular phase i**{exponent} != 1"


def _weight_exponent_shift(spec):
    return -spec.beta * (spec.M - 1) // 2 if spec.weight.kind == "circular" else 0


def gram_vector(spec):
    """The Gram L-vector: coefficient at t is the integrated Wronskian.

    For the circular weight with the monomial family this reduces to the
    sparse sum of normalized Vandermonde coefficients over index sets
    with the centered sum, and that fast path is taken; the general path
    integrates the Wronskian polynomial termwise and agrees with it.
    """
    L, N = spec.L, spec.N
    if spec.weight.kind == "circular":
        _assert_unit_total_phase(spec.beta, spec.M)
        if spec.family.name == "monomial":
            terms = {}
            for t in subset_tuples(N, L, index_sum=L * (N - 1) // 2):
                terms[mask_of(t)] = normalized_vandermonde(t)
            return Multivector(N, L, terms)
    shift = _weight_exponent_shift(spec)
    terms = {}
    for t in subset_tuples(N, L):
        wr = wronskian(spec.family, t)
        if not wr:
            continue
        if shift:
            coeff = spec.weight.integrate_poly(LaurentPoly.from_poly(wr).shift(shift))
        else:
            coeff = spec.weight.integrate_poly(wr)
        if coeff:
            terms[mask_of(t)] = coeff
    return Multivector(N, L, terms)


def max_offset(Nprime, L):
    """Largest attainable |centered sum| over L-subsets of [0, N')."""
    return L * (Nprime - L) // 2


def offset_vector(j, Nprime, L):
    """Grade-L multivector collecting normalized Vandermonde coefficients
    over all L-subsets of [0, N') with centered sum j; empty when |j|
    exceeds the attainable range."""
    if L % 2:
        raise ValueError(f"L must be even, got {L}")
    terms = {}
    if abs(j) <= max_offset(Nprime, L):
        target = j + L * (Nprime - 1) // 2
        for t in subset_tuples(Nprime, L, index_sum=target):
            terms[mask_of(t)] = normalized_vandermonde(t)
    return Multivector(Nprime, L, terms)


def _binomial_coefficient_poly(beta, delta, exponent):
    # C(beta, beta/2 + delta) * (-y)**exponent as a Poly in y
    c = math.comb(beta, beta // 2 + delta)
    if exponent % 2:
        c = -c
    return Poly.monomial(exponent, c)


def pinned_gram_symbolic(beta, M, m, convention="derived"):
    """Pinned Gram vector with symbolic coefficients, circular ensemble.

    m = 2: pinned at a conjugate pair e^{i theta}, e^{-i theta};
    coefficients are polynomials in c = 2*cos(theta) (the two Laurent
    index conventions coincide by symmetry).

    m = 1: pinned at one point; coefficients are polynomials in the
    formal position y.  ``convention`` picks the Laurent coefficient
    index: "derived" reads off the constant-term integral directly
    (exponent beta/2 + offset), "printed" uses the mirrored index
    (exponent beta/2 - offset).  The two give equal hyperpfaffians.
    """
    L = math.isqrt(beta)
    if L * L != beta or L % 2:
        raise ValueError(f"beta must be an even perfect square, got {beta}")
    if m not in (1, 2):
        raise ValueError("symbolic pinning supports m = 1 or 2 only")
    if M < m:
        raise ValueError(f"need M >= m, got M={M}, m={m}")
    Nprime = L * (M - m)
    bound = min(beta * m // 2, max_offset(Nprime, L))
    terms = {}
    if m == 2:
        from .correlation import pair_factor_coefficient

        for t in subset_tuples(Nprime, L, max_abs_offset=bound):
            delta = centered_sum(t, Nprime)
            coeff = normalized_vandermonde(t) * pair_factor_coefficient(delta, beta)
            if coeff:
                terms[mask_of(t)] = coeff
    else:
        if convention not in ("derived", "printed"):
            raise ValueError(f"unknown convention {convention!r}")
        for t in subset_tuples(Nprime, L, max_abs_offset=bound):
            delta = centered_sum(t, Nprime)
            exponent = beta // 2 + delta if convention == "derived" else beta // 2 - delta
            coeff = normalized_vandermonde(t) * _binomial_coefficient_poly(
                beta, delta, exponent
            )
            if coeff:
                terms[mask_of(t)] = coeff
    return Multivector(Nprime, L, terms)


def _unit_circle_product_poly(beta, ys):
    """prod_j (x - y_j)**beta over a conjugate-closed multiset of exact
    unit-circle points (cos, sin) pairs, as a LaurentPoly with rational
    coefficients (exponents from 0)."""
    points = [(Fraction(p), Fraction(q)) for p, q in ys]
    for p, q in points:
        if p * p + q * q != 1:
            raise ValueError(f"({p},{q}) is not on the unit circle")
    remaining = list(points)
    prod = LaurentPoly(0, (1,))
    while remaining:
        p, q = remaining.pop()
        if q == 0:
            factor = LaurentPoly(0, (-p, 1))  # x - (+-1)
        else:
            try:
                remaining.remove((p, -q))
            except ValueError:
                raise ValueError(
                    "exact circular pinning needs a conjugate-closed point set"
                ) from None
            factor = LaurentPoly(0, (1, -2 * p, 1))  # (x-y)(x-conj(y))
        prod = prod * factor**beta
    return prod


def pinned_gram_points(spec, m, ys):
    """Pinned Gram vector at explicit exact positions.

    Circular weight: ``ys`` is a conjugate-closed list of (cos, sin)
    rational pairs on the unit circle.  Real weights: ``ys`` is a list
    of exact rationals.  m = 0 reduces to the plain Gram vector.
    """
    if m != len(ys):
        raise ValueError(f"expected {m} pinned points, got {len(ys)}")
    if m == 0:
        return gram_vector(spec)
    if m >= spec.M:
        raise ValueError(
            f"cannot pin {m} of {spec.M} particles; pinning all of them leaves "
            "the empty wedge, handled by the caller"
        )
    L = spec.L
    beta = spec.beta
    Nprime = L * (spec.M - m)
    terms = {}
    if spec.weight.kind == "circular":
        _assert_unit_total_phase(beta, spec.M)
        prod = _unit_circle_product_poly(beta, ys)
        # coefficient of x^(beta*m/2 - offset) in prod, times the
        # normalized Vandermonde; exponents outside [0, beta*m] vanish
        bound = min(beta * m // 2, max_offset(Nprime, L))
        for t in subset_tuples(Nprime, L, max_abs_offset=bound):
            delta = centered_sum(t, Nprime)
            coeff = prod.coefficient(beta * m // 2 - delta)
            if coeff:
                terms[mask_of(t)] = normalized_vandermonde(t) * coeff
    else:
        prod = Poly((1,))
        for y in ys:
            prod = prod * Poly((-Fraction(y), 1)) ** beta
        for t in subset_tuples(Nprime, L):
            wr = wronskian(spec.family, t)
            if not wr:
                continue
            coeff = spec.weight.integrate_poly(prod * wr)
            if coeff:
                terms[mask_of(t)] = coeff
    return Multivector(Nprime, L, terms)
