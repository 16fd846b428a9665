"""Independent brute-force ground truth via constant-term integration.

Integrals over the unit circle are evaluated by expanding the joint
density as a sparse multivariate Laurent polynomial and reading off the
constant term.  This path shares only the scalar ring with the main
engine: no exterior algebra, no Wronskians, no index-set machinery.

Expansion is exponential in the particle count, so every entry point
enforces a hard budget with an explicit refusal message naming the
supported grid.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import BudgetError
from .scalar import LaurentPoly, Poly

__all__ = [
    "MultiLaurent",
    "circular_partition_ct",
    "pair_marginal_ct",
    "first_marginal_ct",
    "scaled_joint_density",
    "haar_mean_pair",
    "det_exact",
]


class MultiLaurent:
    """Sparse Laurent polynomial in several variables.

    Terms map exponent tuples to exact coefficients (int, Fraction, or
    Poly for a symbolic parameter).  No zero coefficients are stored.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def from_univariate(cls, nvars, var, lp):
        """Lift a univariate LaurentPoly into variable ``var``."""
        terms = {}
        for k, c in lp.support():
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = c
        return cls(nvars, terms)

    @classmethod
    def difference_power(cls, nvars, lo, hi, beta):
        """(x_hi - x_lo)**beta expanded by the binomial theorem."""
        terms = {}
        for k in range(beta + 1):
            c = math.comb(beta, k)
            if (beta - k) % 2:
                c = -c
            e = [0] * nvars
            e[hi] = k
            e[lo] = beta - k
            terms[tuple(e)] = c
        return cls(nvars, terms)

    def shift_all(self, k):
        """Multiply by (x_0 * ... * x_{n-1})**k."""
        return MultiLaurent(
            self.nvars,
            {tuple(v + k for v in e): c for e, c in self.terms.items()},
        )

    def __mul__(self, other):
        if isinstance(other, MultiLaurent):
            if self.nvars != other.nvars:
                raise ValueError("variable count mismatch")
            a, b = self.terms, other.terms
            if len(b) < len(a):
                a, b = b, a
            out = {}
            get = out.get
            for ea, ca in a.items():
                for eb, cb in b.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    p = ca * cb
                    cur = get(e)
                    out[e] = p if cur is None else cur + p
            return MultiLaurent(self.nvars, out)
        return MultiLaurent(
            self.nvars, {e: c * other for e, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiLaurent(self.nvars, out)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def term_count(self):
        return len(self.terms)


def _phase_sign(exponent):
    """i**exponent for the even exponents that occur here."""
    r = exponent % 4
    if r == 0:
        return 1
    if r == 2:
        return -1
    raise ValueError(f"non-real phase i**{exponent}")


def _pairwise_product(nvars, beta, budget):
    prod = MultiLaurent.one(nvars)
    for lo in range(nvars):
        for hi in range(lo + 1, nvars):
            prod = prod * MultiLaurent.difference_power(nvars, lo, hi, beta)
            if prod.term_count() > budget:
                raise BudgetError(
                    f"expansion exceeded {budget} terms; supported grid: "
                    "beta <= 4 with M <= 4, beta = 16 with M <= 3"
                )
    return prod


_CT_BUDGET = 200_000


def circular_partition_ct(beta, M):
    """Partition function of the circular ensemble by direct expansion.

    Z = i**(M(M-1)beta/2)/M! * CT[ prod (x_n - x_m)^beta * prod x^(-(M-1)beta/2) ];
    the phase power is real (+-1) for even beta and folded in exactly.
    """
    if beta < 1 or beta % 2:
        raise ValueError(f"beta must be a positive even integer, got {beta}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if (beta + 1) ** (M * (M - 1) // 2) > _CT_BUDGET:
        raise BudgetError(
            f"beta={beta}, M={M} needs ~{(beta + 1) ** (M * (M - 1) // 2)} "
            "expansion terms; supported grid: beta <= 4 with M <= 4, beta = 16 with M <= 3"
        )
    prod = _pairwise_product(M, beta, _CT_BUDGET)
    ct = prod.coefficient((beta * (M - 1) // 2,) * M)
    sign = _phase_sign(M * (M - 1) * beta // 2)
    return Fraction(sign * ct, math.factorial(M))


def _pair_pinned_factor(beta):
    """(x + 1/x - c)**beta with coefficients Poly in c."""
    base = LaurentPoly(-1, (1, Poly((0, -1)), 1))
    return base**beta


def pair_marginal_ct(beta, M):
    """Marginal pair density by direct constant-term integration.

    Pins a conjugate pair at gap angle theta and integrates out the
    remaining M-2 particles.  Returns the even polynomial r in
    c = 2*cos(theta) such that, in the Haar density convention,

        R2(theta) = M(M-1)/central * (4 - c^2)^(beta/2) * r(c).

    This is the ground-truth counterpart of the hyperpfaffian pipeline.
    """
    if beta < 2 or beta % 2:
        raise ValueError(f"beta must be a positive even integer, got {beta}")
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    k = M - 2
    est = (beta + 1) ** (k * (k - 1) // 2) * (2 * beta + 1) ** k
    if est > _CT_BUDGET:
        raise BudgetError(
            f"beta={beta}, M={M} needs ~{est} expansion terms; supported grid: "
            "beta <= 4 with M <= 5, beta = 16 with M <= 4"
        )
    if k == 0:
        return Poly((1,))
    # pairwise repulsion among integrated particles, |x_i-x_j|^beta each
    prod = _pairwise_product(k, beta, _CT_BUDGET)
    prod = prod.shift_all(-beta * (k - 1) // 2)
    sign = _phase_sign(k * (k - 1) * beta // 2)
    # interaction with the pinned conjugate pair, per integrated particle
    pinned = _pair_pinned_factor(beta)
    for var in range(k):
        prod = prod * MultiLaurent.from_univariate(k, var, pinned)
        if prod.term_count() > _CT_BUDGET:
            raise BudgetError("expansion exceeded budget during pinned multiply")
    ct = prod.constant_term()
    if not isinstance(ct, Poly):
        ct = Poly((ct,))
    return sign * ct


def first_marginal_ct(beta, M):
    """R_1 by direct constant-term integration (Haar convention).

    Rotation invariance allows pinning the point at 1; the exact result
    must equal M.
    """
    if beta < 2 or beta % 2:
        raise ValueError(f"beta must be a positive even integer, got {beta}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    k = M - 1
    est = (beta + 1) ** (k * (k - 1) // 2) * (beta + 1) ** k
    if est > _CT_BUDGET:
        raise BudgetError(
            f"beta={beta}, M={M} exceeds the first-marginal budget (~{est} terms)"
        )
    if k == 0:
        # single particle: density is the constant 1 against Haar measure
        return Fraction(1)
    prod = _pairwise_product(k, beta, _CT_BUDGET)
    prod = prod.shift_all(-beta * (k - 1) // 2)
    sign = _phase_sign(k * (k - 1) * beta // 2)
    pinned = LaurentPoly(-1, (-1, 2, -1)) ** (beta // 2)  # |x - 1|^beta
    for var in range(k):
        prod = prod * MultiLaurent.from_univariate(k, var, pinned)
    ct = sign * prod.constant_term()
    from .scalar import multinomial_central

    # M * CT / (M! Z) with M! Z = central multinomial
    return Fraction(M * ct, multinomial_central(beta, M))


def scaled_joint_density(beta, M, ys):
    """M! times the joint density at exact unit-circle points (m = M case).

    ``ys`` is a list of (cos, sin) rational pairs.  Equals
    M!/central * prod |y_k - y_j|^beta.
    """
    from .scalar import multinomial_central

    points = [(Fraction(p), Fraction(q)) for p, q in ys]
    if len(points) != M:
        raise ValueError(f"need all {M} positions, got {len(points)}")
    for p, q in points:
        if p * p + q * q != 1:
            raise ValueError(f"({p},{q}) is not on the unit circle")
    out = Fraction(math.factorial(M), multinomial_central(beta, M))
    for i in range(M):
        for j in range(i + 1, M):
            dp = points[j][0] - points[i][0]
            dq = points[j][1] - points[i][1]
            out *= (dp * dp + dq * dq) ** (beta // 2)
    return out


def haar_mean_pair(beta, M, r):
    """Haar average over the gap angle of the pair marginal.

    Computes CT_z[(-1)^(beta/2) (z - 1/z)^beta r(z + 1/z)] * M(M-1)/central,
    entirely within this module.  Telescopes to (M-1) * R_1 = M(M-1).
    """
    from .scalar import multinomial_central

    sin_pow = LaurentPoly(-beta, (1,)) * LaurentPoly(0, (-1, 0, 1)) ** beta
    if (beta // 2) % 2:
        sin_pow = -sin_pow
    zvar = LaurentPoly(-1, (1, 0, 1))  # z + 1/z
    ct = (sin_pow * sum((c * zvar**k for k, c in enumerate(r.coeffs) if c), start=LaurentPoly())).coefficient(0)
    return Fraction(M * (M - 1) * ct, multinomial_central(beta, M))


def _bareiss_div(value, pivot):
    if isinstance(value, int) and isinstance(pivot, int):
        q, rem = divmod(value, pivot)
        if rem:
            raise ArithmeticError("fraction-free elimination produced a remainder")
        return q
    return value / pivot


def det_exact(rows):
    """Exact determinant by Bareiss fraction-free elimination.

    Stays in integers for integer input; exact over Fractions too.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _bareiss_div(m[i][j] * pivot - m[i][k] * m[k][j], prev)
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]
