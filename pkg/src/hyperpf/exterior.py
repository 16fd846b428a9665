"""Sparse grade-homogeneous multivectors over an exact coefficient ring.

A multivector of grade g in ambient dimension N is a sparse map from
g-subsets of [0, N) (stored as bitmasks) to nonzero coefficients.  The
coefficient ring is duck-typed: int, Fraction, Poly and LaurentPoly all
work, as does any type with exact ``+ - *`` and truthiness meaning
"nonzero".

Signs.  For disjoint masks t, u the merge sign is the parity of the
number of pairs (i in t, j in u) with i > j, i.e. the sign of sorting
the concatenation t,u.  Per mask t we precompute a word whose bit b
holds the parity of #(members of t above b); the merge parity is then
popcount(word & u) & 1.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .indexcomb import indices_of, mask_of
from .scalar import encode_scalar, exact_div

__all__ = [
    "Multivector",
    "merge_sign",
    "wedge",
    "star_top",
    "wedge_power_star",
    "hyperpfaffian",
    "pfaffian_classical",
]


@lru_cache(maxsize=None)
def _sign_word(t):
    """Word with bit b = parity of the number of members of t above b."""
    w = 0
    b = 0
    m = t
    while m >> (b + 1):
        if (m >> (b + 1)).bit_count() & 1:
            w |= 1 << b
        b += 1
    return w


def merge_sign(t, u):
    """0 if the sets overlap, else (-1)**(inversions between t and u).

    Accepts bitmasks or index iterables.
    """
    if not isinstance(t, int):
        t = mask_of(t)
    if not isinstance(u, int):
        u = mask_of(u)
    if t & u:
        return 0
    return -1 if (_sign_word(t) & u).bit_count() & 1 else 1


class Multivector:
    """Immutable sparse element of the grade-g exterior power of F^N."""

    __slots__ = ("N", "grade", "terms")

    def __init__(self, N, grade, terms=None):
        if not 0 <= grade <= N:
            raise ValueError(f"grade {grade} out of range for dimension {N}")
        clean = {}
        if terms:
            for mask, coeff in terms.items():
                if not coeff:
                    continue
                if mask.bit_count() != grade or mask >> N:
                    raise ValueError(
                        f"mask {bin(mask)} is not a grade-{grade} subset of [0,{N})"
                    )
                clean[mask] = coeff
        self.N = N
        self.grade = grade
        self.terms = clean

    @classmethod
    def from_indexed(cls, N, grade, pairs):
        """Build from (indices, coeff) pairs; repeated keys accumulate."""
        terms = {}
        for indices, coeff in pairs:
            m = mask_of(indices)
            terms[m] = terms.get(m, 0) + coeff
        return cls(N, grade, terms)

    def items(self):
        """Terms as (indices tuple, coeff), sorted lexicographically."""
        return sorted(
            ((indices_of(m), c) for m, c in self.terms.items()), key=lambda p: p[0]
        )

    def coefficient(self, indices):
        m = indices if isinstance(indices, int) else mask_of(indices)
        return self.terms.get(m, 0)

    def support_size(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Multivector)
            and self.N == other.N
            and self.grade == other.grade
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.N != other.N or self.grade != other.grade:
            raise ValueError("ambient dimension / grade mismatch")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.N, self.grade, out)

    def __neg__(self):
        return Multivector(self.N, self.grade, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        if not scalar:
            return Multivector(self.N, self.grade, {})
        return Multivector(
            self.N, self.grade, {m: scalar * c for m, c in self.terms.items()}
        )

    __mul__ = __rmul__

    def to_json_dict(self):
        return {
            "N": self.N,
            "grade": self.grade,
            "terms": [
                {"indices": list(t), "coeff": encode_scalar(c)}
                for t, c in self.items()
            ],
        }

    def __repr__(self):
        return f"Multivector(N={self.N}, grade={self.grade}, nterms={len(self.terms)})"


def _wedge_terms(a_terms, b_terms):
    """Raw wedge of two sparse term dicts (mask -> coeff)."""
    out = {}
    get = out.get
    for tm, tc in a_terms.items():
        sw = _sign_word(tm)
        for um, uc in b_terms.items():
            if tm & um:
                continue
            p = tc * uc
            if (sw & um).bit_count() & 1:
                p = -p
            v = tm | um
            cur = get(v)
            out[v] = p if cur is None else cur + p
    return {m: c for m, c in out.items() if c}


def wedge(a, b):
    """Exterior product of two multivectors over the same ambient space."""
    if a.N != b.N:
        raise ValueError(f"ambient dimension mismatch: {a.N} vs {b.N}")
    grade = a.grade + b.grade
    if grade > a.N:
        raise ValueError(f"wedge grade {grade} exceeds dimension {a.N}")
    return Multivector(a.N, grade, _wedge_terms(a.terms, b.terms))


def star_top(a):
    """Coefficient of e_0 ^ ... ^ e_{N-1} for a top-grade multivector."""
    if a.grade != a.N:
        raise ValueError(f"star_top requires grade {a.N}, got {a.grade}")
    return a.terms.get((1 << a.N) - 1, 0)


def _contract_terms(a_terms, b_terms, full):
    """Top coefficient of the wedge of two term dicts, by complement lookup.

    Iterates over the smaller side; the merge sign is always taken in
    (left factor, right factor) orientation.
    """
    total = 0
    if len(a_terms) <= len(b_terms):
        bget = b_terms.get
        for tm, tc in a_terms.items():
            um = full ^ tm
            uc = bget(um)
            if uc is None:
                continue
            p = tc * uc
            total = total - p if (_sign_word(tm) & um).bit_count() & 1 else total + p
    else:
        aget = a_terms.get
        for um, uc in b_terms.items():
            tm = full ^ um
            tc = aget(tm)
            if tc is None:
                continue
            p = tc * uc
            total = total - p if (_sign_word(tm) & um).bit_count() & 1 else total + p
    return total


def wedge_power_star(w, M):
    """Top-grade coefficient of the M-th wedge power of w (no 1/M!).

    Defined for any grade (odd grades give 0 for M >= 2); M = 0 requires
    a zero-dimensional ambient space and returns 1.
    """
    if M < 0:
        raise ValueError("wedge power must be non-negative")
    if M == 0:
        if w.N != 0:
            raise ValueError("0-th wedge power is top-grade only when N = 0")
        return 1
    if w.grade * M != w.N:
        raise ValueError(f"grade {w.grade} times M={M} must equal dimension {w.N}")
    if M == 1:
        return star_top(w)
    acc = w.terms
    for _ in range(M - 2):
        acc = _wedge_terms(acc, w.terms)
    return _contract_terms(acc, w.terms, (1 << w.N) - 1)


def hyperpfaffian(w, M):
    """Exact scalar  *(w^^M) / M!  for an even-grade multivector.

    Requires even grade L with ambient dimension N = L*M; the division
    by M! must be exact and is verified when the ring is integral.
    """
    if w.grade % 2:
        raise ValueError(f"hyperpfaffian requires even grade, got {w.grade}")
    if w.grade * M != w.N:
        raise ValueError(f"need N = L*M, got N={w.N}, L={w.grade}, M={M}")
    return exact_div(wedge_power_star(w, M), math.factorial(M))


def pfaffian_classical(rows):
    """Pfaffian of an antisymmetric matrix by recursive first-row expansion.

    Independent of the exterior-algebra route; exact over any exact
    scalar type.  Raises on asymmetry.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n % 2:
        raise ValueError("Pfaffian needs even dimension")
    for i in range(n):
        if rows[i][i] != 0:
            raise ValueError(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, n):
            if rows[i][j] != -rows[j][i]:
                raise ValueError(f"matrix is not antisymmetric at ({i},{j})")

    memo = {}

    def pf(mask):
        if mask == 0:
            return 1
        known = memo.get(mask)
        if known is not None:
            return known
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        total = 0
        sign = 1
        m = rest
        while m:
            lowj = m & -m
            j = lowj.bit_length() - 1
            term = rows[i][j]
            if term:
                sub = pf(rest ^ lowj)
                if sub:
                    total = total + sign * term * sub
            sign = -sign
            m ^= lowj
        memo[mask] = total
        return total

    return pf((1 << n) - 1)
