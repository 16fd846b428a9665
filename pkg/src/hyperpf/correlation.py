"""Correlation functions of circular ensembles with even-square beta.

The reduced pair correlation is

    R2(theta) = (M!/(M-2)!) / C * (2 sin theta)^beta / (2 pi) * r(2 cos theta)

with C the central multinomial coefficient and r an even integer
polynomial of degree beta*(M-2).  r is assembled as a sum over the
weakly increasing zero-sum offset multisets j = (j_1 <= ... <= j_{M-2}):

    r(y) = sum_j  mult(j) * prod_n b_{j_n}(y) * T(j),

where b_j is the coefficient of x^j in (x + 1/x - y)^beta as a
polynomial in y = 2 cos(theta), T(j) is the top-grade coefficient of
the wedge of the offset vectors for j_1..j_{M-2} (an integer), and
mult(j) counts the orderings of the multiset.

Cost lives almost entirely in T(j).  Offset-vector wedges depend only
on the multiset, so partial products over sorted pairs are memoized and
every T is obtained by one complement-lookup contraction of two halves.
The multiset sum may be partitioned across threads; all arithmetic is
exact, so the reduction is order-independent and results are
bit-identical at any parallelism degree.

The default density convention is the angle density in d(theta) (the
1/(2 pi) above), under which the integral of R2 over [0, 2 pi] is
exactly M*(M-1); ``angular_mass`` verifies that identity.  The "haar"
convention drops the 1/(2 pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BudgetError
from .exterior import _contract_terms, _wedge_terms, hyperpfaffian
from .gram import EnsembleSpec, max_offset, offset_vector, pinned_gram_points, pinned_gram_symbolic
from .indexcomb import arrangement_count, zero_sum_multisets
from .scalar import Poly, multinomial_central

__all__ = [
    "pair_factor_coefficient",
    "CorrelationReport",
    "pair_correlation",
    "fourier_coefficients",
    "angular_mass",
    "RmFactors",
    "correlation_at_points",
    "first_correlation_constant",
    "sample_for_plot",
    "PAIR_SUPPORTED_NOTE",
]

# supported sizes for pair_correlation; see _check_pair_budget
PAIR_SUPPORTED_NOTE = (
    "supported grid: M <= 6 with C(L*(M-2), L)^2 <= 2*10^7 "
    "(covers beta=4 and beta=16 for M <= 6, beta=36 for M <= 4)"
)

_PAIR_TABLE_CAP = 20_000_000


@lru_cache(maxsize=None)
def pair_factor_coefficient(j, beta):
    """Coefficient of x^j in (x + 1/x - y)^beta, as a Poly in y.

    Only binomial terms of matching parity contribute (the inner
    binomial is undefined at half-integers); the result equals the
    direct Laurent expansion.
    """
    j = abs(j)
    if j > beta:
        raise ValueError(f"|j| = {j} exceeds beta = {beta}")
    coeffs = [0] * (beta - j + 1)
    for ell in range(j, beta + 1, 2):
        c = math.comb(beta, ell) * math.comb(ell, (ell + j) // 2)
        if (beta - ell) % 2:
            c = -c
        coeffs[beta - ell] = c
    return Poly(coeffs)


class _WedgeTable:
    """Offset vectors and memoized pairwise wedges for one (beta, M)."""

    def __init__(self, beta, L, Nprime):
        self.full = (1 << Nprime) - 1
        self.bound = min(beta, max_offset(Nprime, L))
        self.eps = {
            j: offset_vector(j, Nprime, L).terms
            for j in range(-self.bound, self.bound + 1)
        }
        self._pairs = {}

    def pair(self, a, b):
        key = (a, b)
        known = self._pairs.get(key)
        if known is None:
            known = _wedge_terms(self.eps[a], self.eps[b])
            self._pairs[key] = known
        return known

    def star_wedge(self, js):
        """Integer top coefficient of the wedge of the offset vectors."""
        n = len(js)
        if n == 0:
            return 1
        if any(abs(j) > self.bound for j in js):
            return 0
        if n == 1:
            return self.eps[js[0]].get(self.full, 0)
        if n == 2:
            return _contract_terms(self.eps[js[0]], self.eps[js[1]], self.full)
        if n == 3:
            return _contract_terms(self.pair(js[0], js[1]), self.eps[js[2]], self.full)
        if n == 4:
            return _contract_terms(
                self.pair(js[0], js[1]), self.pair(js[2], js[3]), self.full
            )
        raise BudgetError(f"wedge of {n} offset vectors unsupported; {PAIR_SUPPORTED_NOTE}")


@dataclass(frozen=True)
class CorrelationReport:
    """Exact pair-correlation data: normalization, r, Fourier row."""

    beta: int
    M: int
    m: int
    m_falling: int  # M! / (M-m)!
    central: int  # central multinomial coefficient
    r: Poly  # integer polynomial in y = 2 cos(theta)
    fourier: tuple  # cos(k*theta) coefficients of r(2 cos theta)
    convention: str

    @property
    def normalization(self):
        return Fraction(self.m_falling, self.central)

    def to_json_dict(self):
        return {
            "beta": self.beta,
            "M": self.M,
            "m": self.m,
            "normalization": {
                "num": str(self.normalization.numerator),
                "den": str(self.normalization.denominator),
                "factored": {
                    "m_falling": str(self.m_falling),
                    "central_multinomial": str(self.central),
                },
            },
            "r_coeffs": [str(c) for c in self.r.coeffs],
            "fourier": [str(c) for c in self.fourier],
            "convention": self.convention,
        }


def _check_pair_budget(beta, M, L):
    count = M - 2
    if count > 4:
        raise BudgetError(f"M = {M} too large; {PAIR_SUPPORTED_NOTE}")
    if count >= 2:
        keys = math.comb(L * count, L)
        if keys * keys > _PAIR_TABLE_CAP:
            raise BudgetError(
                f"beta={beta}, M={M} needs {keys}^2 wedge pairs; {PAIR_SUPPORTED_NOTE}"
            )


def _accumulate(rvec, table, bprods, multisets):
    for js in multisets:
        top = table.star_wedge(js)
        if not top:
            continue
        weight = arrangement_count(js) * top
        poly = bprods(js)
        for k, c in enumerate(poly.coeffs):
            if c:
                rvec[k] += weight * c


def pair_correlation(beta, M, threads=1, convention="angle"):
    """Exact reduced pair correlation for the circular ensemble.

    Returns a CorrelationReport whose polynomial r has degree
    beta*(M-2) and even powers only (both asserted).  ``threads``
    partitions the multiset sum deterministically; output is identical
    at every degree.
    """
    L = math.isqrt(beta)
    if L * L != beta or L % 2:
        raise ValueError(f"beta must be an even perfect square, got {beta}")
    if M < 2:
        raise ValueError(f"pair correlation needs M >= 2, got {M}")
    if convention not in ("angle", "haar"):
        raise ValueError(f"unknown convention {convention!r}")
    _check_pair_budget(beta, M, L)

    count = M - 2
    table = _WedgeTable(beta, L, L * count)

    bprod_cache = {}

    def bprods(js):
        if not js:
            return Poly((1,))
        if len(js) == 1:
            return pair_factor_coefficient(js[0], beta)
        out = bprod_cache.get(js)
        if out is None:
            half = len(js) // 2
            out = bprods(js[:half]) * bprods(js[half:])
            bprod_cache[js] = out
        return out

    multisets = list(zero_sum_multisets(count, table.bound))
    degree = beta * count
    if threads <= 1 or len(multisets) < 2:
        rvec = [0] * (degree + 1)
        _accumulate(rvec, table, bprods, multisets)
    else:
        from concurrent.futures import ThreadPoolExecutor

        chunks = [multisets[i::threads] for i in range(threads)]

        def work(chunk):
            local = [0] * (degree + 1)
            _accumulate(local, table, bprods, chunk)
            return local

        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(work, chunks))
        rvec = [sum(col) for col in zip(*partials)]

    r = Poly(rvec)
    assert r.degree == degree, f"r degree {r.degree} != {degree}"
    assert all(
        not c for k, c in enumerate(r.coeffs) if k % 2
    ), "r must contain even powers only"
    return CorrelationReport(
        beta=beta,
        M=M,
        m=2,
        m_falling=M * (M - 1),
        central=multinomial_central(beta, M),
        r=r,
        fourier=fourier_coefficients(r),
        convention="angle-density-1/(2pi)" if convention == "angle" else "haar",
    )


def _z_expansion(r):
    """Coefficients of r(z + 1/z) as a Laurent list over z^-d .. z^d."""
    d = r.degree if r.degree is not None else 0
    z = [0] * (2 * d + 1)
    for k, a in enumerate(r.coeffs):
        if not a:
            continue
        for i in range(k + 1):
            z[(k - 2 * i) + d] += a * math.comb(k, i)
    return z, d


def fourier_coefficients(r):
    """cos(k*theta) coefficients of r(2 cos theta), k = 0 .. deg r.

    Expands r(z + 1/z) with z = e^{i theta}; the cos(k theta)
    coefficient for k >= 1 is the z^k plus the z^-k coefficient (equal
    by symmetry), and the constant term is the z^0 coefficient.
    """
    z, d = _z_expansion(r)
    return tuple([z[d]] + [z[d + k] + z[d - k] for k in range(1, d + 1)])


def angular_mass(report):
    """Exact integral of R2 over theta in [0, 2 pi] (angle convention).

    Uses the z^0 coefficient of (2 sin theta)^beta * r(2 cos theta);
    equals M*(M-1) by the occupation identity, which also pins the
    1/(2 pi) convention.
    """
    beta = report.beta
    z, d = _z_expansion(report.r)
    # (2 sin theta)^beta = (-1)^(beta/2) (z - 1/z)^beta; pair z^s with z^-s
    ct = 0
    for s in range(-min(d, beta), min(d, beta) + 1, 2):
        zr = z[d + s]
        if not zr:
            continue
        w = math.comb(beta, (beta + s) // 2)
        ct += -zr * w if (s // 2) % 2 else zr * w
    return Fraction(report.m_falling * ct, report.central)


@dataclass(frozen=True)
class RmFactors:
    """Exact factorization of an m-point circular correlation value."""

    beta: int
    M: int
    m: int
    vandermonde_abs_power: Fraction
    phase: int
    pf_value: Fraction
    prefactor: Fraction  # M! / central multinomial
    value: Fraction
    coincident: bool


def correlation_at_points(beta, M, ys):
    """R_m at explicit exact unit-circle points (Haar density convention).

    ``ys`` is a conjugate-closed list of (cos, sin) rational pairs;
    coincident points short-circuit to a flagged zero.  Returns the
    three factors (squared-distance product, unimodular phase, pinned
    hyperpfaffian) and their normalized product.
    """
    L = math.isqrt(beta)
    if L * L != beta or L % 2:
        raise ValueError(f"beta must be an even perfect square, got {beta}")
    m = len(ys)
    if not 1 <= m <= M:
        raise ValueError(f"need 1 <= m <= M points, got {m}")
    points = [(Fraction(p), Fraction(q)) for p, q in ys]
    prefactor = Fraction(math.factorial(M), multinomial_central(beta, M))
    if len(set(points)) < len(points):
        return RmFactors(beta, M, m, Fraction(0), 1, Fraction(0), prefactor, Fraction(0), True)
    vdm = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            dp = points[j][0] - points[i][0]
            dq = points[j][1] - points[i][1]
            vdm *= (dp * dp + dq * dq) ** (beta // 2)
    # prod y_n over a conjugate-closed set is +-1 and the exponent
    # -beta*(M-m)/2 is even (beta = L^2 with L even), so the phase is 1
    assert beta % 4 == 0
    phase = 1
    if m == M:
        pf = Fraction(1)  # all particles pinned: empty wedge power
    else:
        spec = EnsembleSpec.circular(L, M)
        pf = Fraction(hyperpfaffian(pinned_gram_points(spec, m, points), M - m))
    value = prefactor * vdm * phase * pf
    return RmFactors(beta, M, m, vdm, phase, pf, prefactor, value, False)


def first_correlation_constant(beta, M):
    """R_1 for the circular ensemble, via the symbolic pinned vector.

    The pinned hyperpfaffian is a single monomial const * y^(beta*(M-1)/2)
    whose power cancels the matching unimodular prefactor exactly;
    returns (value, pinned hyperpfaffian polynomial).  The value is M.
    """
    pf = hyperpfaffian(pinned_gram_symbolic(beta, M, 1), M - 1)
    d = beta * (M - 1) // 2
    if any(c for k, c in enumerate(pf.coeffs) if k != d):
        raise AssertionError(f"pinned hyperpfaffian is not a pure y^{d} monomial: {pf!r}")
    value = Fraction(
        math.factorial(M) * pf.coefficient(d), multinomial_central(beta, M)
    )
    return value, pf


def sample_for_plot(report, points):
    """(theta, R2(theta)) pairs on a uniform grid over [0, pi].

    The pipeline is exact up to this boundary; floats appear only here.
    """
    if points < 2:
        raise ValueError("need at least 2 sample points")
    norm = report.m_falling / report.central
    if report.convention.startswith("angle"):
        norm /= 2 * math.pi
    out = []
    for i in range(points):
        theta = math.pi * i / (points - 1)
        value = norm * (2 * math.sin(theta)) ** report.beta * report.r(
            2 * math.cos(theta)
        )
        out.append((theta, value))
    return out
