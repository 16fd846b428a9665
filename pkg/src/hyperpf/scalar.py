"""Exact scalar arithmetic: dense polynomials and Laurent polynomials.

Integers are plain Python ``int`` (arbitrary precision, exact decimal
round-trip) and rationals are ``fractions.Fraction`` (always reduced,
positive denominator).  This module adds the two polynomial rings the
rest of the package computes in, plus a handful of exact combinatorial
scalars.

All values are immutable; all operations are pure functions, so values
may be shared freely between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Poly",
    "LaurentPoly",
    "exact_div",
    "multinomial_central",
    "double_factorial_even",
    "double_factorial_odd",
    "encode_scalar",
    "decode_rational",
]


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """Dense univariate polynomial, coefficients indexed by degree.

    Coefficients may be any exact scalar supporting ``+ - *`` (int,
    Fraction, or another Poly for nested rings).  Trailing zeros are
    trimmed on construction; the zero polynomial has an empty
    coefficient tuple and ``degree`` ``None`` (a sentinel, never -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(tuple(coeffs))

    @classmethod
    def monomial(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        # scalar comparison: constant (or zero) polynomials only
        if not self.coeffs:
            return not other
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly((-other,)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not other:
                return _ZERO_POLY
            return Poly(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _ZERO_POLY
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k):
        """Multiply by x**k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


_ZERO_POLY = Poly()


class LaurentPoly:
    """Laurent polynomial: lowest exponent plus dense coefficient run.

    Both the first and last stored coefficients are nonzero unless the
    polynomial is identically zero (stored as ``low=0, coeffs=()``).
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, low=0, coeffs=()):
        coeffs = tuple(coeffs)
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        coeffs = _trim(coeffs[start:])
        if coeffs:
            self.low = low + start
        else:
            self.low = 0
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, p):
        return cls(0, p.coeffs)

    @classmethod
    def monomial(cls, k, c=1):
        return cls(k, (c,))

    @property
    def high(self):
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, j):
        i = j - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def support(self):
        return [(self.low + i, c) for i, c in enumerate(self.coeffs) if c]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if not self.coeffs:
            return not other
        return self.low == 0 and len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly(0, (other,))
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] = c
        for i, c in enumerate(other.coeffs):
            j = other.low - low + i
            out[j] = out[j] + c
        return LaurentPoly(low, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly(0, (other,))
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if not other:
                return LaurentPoly()
            return LaurentPoly(self.low, tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative Laurent power of a non-unit")
        result = LaurentPoly(0, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by x**k (k may be negative)."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.low + k, self.coeffs)

    def __repr__(self):
        return f"LaurentPoly({self.low}, {list(self.coeffs)!r})"


def exact_div(value, n):
    """Divide an exact scalar by a nonzero integer, exactly.

    Integers must be divisible (loud failure otherwise); Fractions
    divide; polynomial rings divide coefficientwise.
    """
    if isinstance(value, int):
        q, r = divmod(value, n)
        if r:
            raise ArithmeticError(f"inexact integer division {value}/{n}")
        return q
    if isinstance(value, Fraction):
        return value / n
    if isinstance(value, Poly):
        return Poly(tuple(exact_div(c, n) for c in value.coeffs))
    if isinstance(value, LaurentPoly):
        return LaurentPoly(value.low, tuple(exact_div(c, n) for c in value.coeffs))
    raise TypeError(f"cannot exactly divide {type(value).__name__}")


def multinomial_central(beta, M):
    """Central multinomial coefficient C(beta*M/2; beta/2, ..., beta/2)."""
    if beta <= 0 or beta % 2:
        raise ValueError(f"beta must be a positive even integer, got {beta}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    q, r = divmod(math.factorial(beta * M // 2), math.factorial(beta // 2) ** M)
    assert not r
    return q


def double_factorial_even(k):
    """k * (k-2) * ... * 4 * 2 for even k >= 0 (empty product = 1)."""
    if k < 0 or k % 2:
        raise ValueError(f"k must be a non-negative even integer, got {k}")
    out = 1
    while k > 0:
        out *= k
        k -= 2
    return out


def double_factorial_odd(k):
    """k * (k-2) * ... * 3 * 1 for odd k >= -1 (empty product = 1)."""
    if k < -1 or not k % 2:
        raise ValueError(f"k must be an odd integer >= -1, got {k}")
    out = 1
    while k > 0:
        out *= k
        k -= 2
    return out


def encode_scalar(v):
    """JSON-friendly exact encoding: decimal strings for integers,
    "num/den" for rationals, lowest-degree-first arrays for polynomials."""
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, Poly):
        return [encode_scalar(c) for c in v.coeffs]
    if isinstance(v, LaurentPoly):
        return {"low": v.low, "coeffs": [encode_scalar(c) for c in v.coeffs]}
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_rational(s):
    """Parse "num/den" or a plain decimal string into Fraction or int."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(int(num), int(den))
    return int(s)
