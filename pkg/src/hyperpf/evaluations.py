"""Exact hyperpfaffian identity checks with structured reports.

Each identity compares a hyperpfaffian computed by the engine against a
known closed form for the partition function of an ensemble (central
multinomial for the circular weight, Selberg product for the Jacobi
weight, factorial product for the Gaussian weight), or against a
structural fact (a blade wedges to zero; the classical Pfaffian
examples).  Passing means exact equality; there are no tolerances.

Two printed-form ambiguities are settled here and recorded in the
report notes rather than silently patched:

* Gaussian moments: the factorial-product identity holds with the true
  normal moments (2j-1)!!; the even-double-factorial variant (2j)!!
  fails.  Both are run.
* The one-point pinned identity: reading the pinned coefficient as a
  Laurent coefficient of x^(-beta/2)(x-y)^beta (either index sign)
  gives polynomial equality; the naive (-y)^offset form collapses the
  y-power and only matches after setting y = 1.  All three are run.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import Multivector, hyperpfaffian, pfaffian_classical, wedge_power_star
from .gram import EnsembleSpec, gram_vector, pinned_gram_symbolic
from .indexcomb import centered_sum, mask_of, normalized_vandermonde, subset_tuples
from .moments import gaussian_paper_weight, gaussian_weight, jacobi_weight
from .scalar import LaurentPoly, Poly, multinomial_central
from .wronskian import hermite_family, monomial_family, shifted_monomial_family

__all__ = [
    "IdentityReport",
    "dyson_rhs",
    "mehta_rhs",
    "selberg_rhs",
    "verify_dyson",
    "verify_jacobi",
    "verify_gaussian_monomial",
    "verify_hermite",
    "verify_r1",
    "verify_zero",
    "verify_pfaffian_examples",
    "default_grid",
]


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: dict
    lhs: str
    rhs: str
    passed: bool
    seconds: float
    note: str = ""

    def to_json_dict(self):
        return {
            "identity": self.identity,
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
            "seconds": round(self.seconds, 6),
            "note": self.note,
        }


def _report(identity, params, lhs, rhs, t0, note=""):
    return IdentityReport(
        identity=identity,
        params=params,
        lhs=str(lhs),
        rhs=str(rhs),
        passed=lhs == rhs,
        seconds=time.perf_counter() - t0,
        note=note,
    )


def dyson_rhs(beta, M):
    return Fraction(multinomial_central(beta, M), math.factorial(M))


def mehta_rhs(beta, M):
    out = Fraction(1, math.factorial(M))
    for n in range(1, M + 1):
        out *= Fraction(math.factorial(n * beta // 2), math.factorial(beta // 2))
    return out


def selberg_rhs(a, b, c, M):
    """The Selberg product with all Gamma arguments integral."""
    out = Fraction(1)
    for n in range(M):
        out *= Fraction(
            math.factorial(a + n * c - 1)
            * math.factorial(b + n * c - 1)
            * math.factorial((n + 1) * c),
            math.factorial(a + b + (M + n - 1) * c - 1) * math.factorial(c),
        )
    return out


def verify_dyson(L, M):
    t0 = time.perf_counter()
    pf = hyperpfaffian(gram_vector(EnsembleSpec.circular(L, M)), M)
    return _report("dyson", {"L": L, "M": M}, Fraction(pf), dyson_rhs(L * L, M), t0)


def verify_jacobi(L, M, a, b, family="monomial"):
    t0 = time.perf_counter()
    N = L * M
    fam = monomial_family(N) if family == "monomial" else shifted_monomial_family(N)
    spec = EnsembleSpec(L, M, jacobi_weight(a, b), fam)
    pf = Fraction(hyperpfaffian(gram_vector(spec), M))
    beta_ab = Fraction(
        math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1)
    )
    rhs = selberg_rhs(a, b, L * L // 2, M) / (math.factorial(M) * beta_ab**M)
    return _report(
        "jacobi",
        {"L": L, "M": M, "a": a, "b": b, "family": family},
        pf,
        rhs,
        t0,
    )


def verify_gaussian_monomial(L, M):
    t0 = time.perf_counter()
    N = L * M
    fam = monomial_family(N)
    pf_true = Fraction(
        hyperpfaffian(gram_vector(EnsembleSpec(L, M, gaussian_weight(), fam)), M)
    )
    pf_paper = Fraction(
        hyperpfaffian(gram_vector(EnsembleSpec(L, M, gaussian_paper_weight(), fam)), M)
    )
    rhs = mehta_rhs(L * L, M)
    note = (
        f"true moments (2j-1)!! give {pf_true}; "
        f"even double factorials (2j)!! give {pf_paper}; "
        f"convention recorded: true moments"
        + ("" if pf_paper != rhs or pf_true == pf_paper else " (both match here)")
    )
    return _report(
        "gaussian-monomial", {"L": L, "M": M}, pf_true, rhs, t0, note=note
    )


def verify_hermite(L, M):
    t0 = time.perf_counter()
    N = L * M
    pf_hermite = Fraction(
        hyperpfaffian(
            gram_vector(EnsembleSpec(L, M, gaussian_weight(), hermite_family(N))), M
        )
    )
    pf_monomial = Fraction(
        hyperpfaffian(
            gram_vector(EnsembleSpec(L, M, gaussian_weight(), monomial_family(N))), M
        )
    )
    rhs = mehta_rhs(L * L, M)
    note = f"monomial-family route gives {pf_monomial}; families agree: {pf_hermite == pf_monomial}"
    return _report("hermite", {"L": L, "M": M}, pf_hermite, rhs, t0, note=note)


def _r1_printed_lhs(beta, M):
    """The one-point pinned vector with the naive (-y)^offset coefficient,
    over the Laurent ring in y."""
    L = math.isqrt(beta)
    Nprime = L * (M - 1)
    terms = {}
    for t in subset_tuples(Nprime, L, max_abs_offset=beta // 2):
        d = centered_sum(t, Nprime)
        c = math.comb(beta, beta // 2 + d) * normalized_vandermonde(t)
        terms[mask_of(t)] = LaurentPoly.monomial(d, -c if d % 2 else c)
    return hyperpfaffian(Multivector(Nprime, L, terms), M - 1)


def verify_r1(L, M):
    """Polynomial identity for the hyperpfaffian of the one-point pinned
    vector: equals central/(M-1)! times y^(beta(M-1)/2)."""
    t0 = time.perf_counter()
    beta = L * L
    d = beta * (M - 1) // 2
    rhs = Poly.monomial(d, Fraction(multinomial_central(beta, M), math.factorial(M - 1)))
    pf_derived = hyperpfaffian(pinned_gram_symbolic(beta, M, 1, convention="derived"), M - 1)
    pf_printed_index = hyperpfaffian(
        pinned_gram_symbolic(beta, M, 1, convention="printed"), M - 1
    )
    pf_naive = _r1_printed_lhs(beta, M)
    lhs = Poly(tuple(Fraction(c) for c in pf_derived.coeffs))
    conventions_agree = pf_derived == pf_printed_index
    naive_at_one = sum(c for _, c in pf_naive.support()) if pf_naive else 0
    note = (
        f"both Laurent index signs agree: {conventions_agree}; "
        f"naive (-y)^offset form gives the y-free value {pf_naive!r}, "
        f"equal to the closed form only at y=1: {naive_at_one == rhs(1)}"
    )
    return _report("r1", {"L": L, "M": M}, lhs, rhs, t0, note=note)


def verify_zero(N, L):
    """The hyperpfaffian of sum_t x^(sum t) * vdm(t) e_t vanishes
    identically: the summand is a monomial multiple of a blade."""
    t0 = time.perf_counter()
    if N % L:
        raise ValueError(f"N = {N} must be a multiple of L = {L}")
    M = N // L
    terms = {
        mask_of(t): Poly.monomial(sum(t), normalized_vandermonde(t))
        for t in subset_tuples(N, L)
    }
    pf = hyperpfaffian(Multivector(N, L, terms), M)
    return _report("zero", {"N": N, "L": L}, pf, Poly(), t0)


def verify_pfaffian_examples(M):
    """The two classical 2M x 2M Pfaffian evaluations, via both the
    multivector route and the recursive matrix route."""
    t0 = time.perf_counter()
    n = 2 * M
    cs = list(range(2, 2 + M))  # arbitrary distinct block values
    diag_mv = Multivector.from_indexed(
        n, 2, [((2 * k, 2 * k + 1), cs[k]) for k in range(M)]
    )
    diag_mat = [[0] * n for _ in range(n)]
    for k in range(M):
        diag_mat[2 * k][2 * k + 1] = cs[k]
        diag_mat[2 * k + 1][2 * k] = -cs[k]
    ones_mv = Multivector(n, 2, {mask_of(t): 1 for t in subset_tuples(n, 2)})
    ones_mat = [[0 if i == j else (1 if i < j else -1) for j in range(n)] for i in range(n)]

    expected_diag = math.prod(cs)
    results = (
        hyperpfaffian(diag_mv, M),
        pfaffian_classical(diag_mat),
        hyperpfaffian(ones_mv, M),
        pfaffian_classical(ones_mat),
    )
    lhs = f"diagonal: PF={results[0]}, Pf={results[1]}; all-ones: PF={results[2]}, Pf={results[3]}"
    rhs = f"diagonal: PF={expected_diag}, Pf={expected_diag}; all-ones: PF=1, Pf=1"
    return _report("pfaffian-examples", {"M": M}, lhs, rhs, t0)


DEFAULT_GRID = {
    "dyson": [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (4, 1), (4, 2), (4, 3), (4, 4), (6, 2)],
    "jacobi": [
        (L, M, a, b)
        for L in (2, 4)
        for M in (1, 2, 3)
        for a in (1, 2, 3)
        for b in (1, 2, 3)
    ],
    "jacobi-shifted": [(2, 2, 1, 1), (2, 3, 2, 3), (4, 2, 3, 1)],
    "gaussian": [(L, M) for L in (2, 4) for M in (1, 2, 3)],
    "hermite": [(L, M) for L in (2, 4) for M in (1, 2, 3)],
    "r1": [(2, 2), (2, 3), (4, 2)],
    "zero": [(4, 2), (8, 2), (8, 4), (12, 4)],
    "pfaffian": [2, 3, 4, 5],
}


def default_grid(identities=None):
    """Run the standard identity grid; returns the list of reports."""
    wanted = set(identities) if identities else None
    reports = []

    def want(name):
        return wanted is None or name in wanted

    if want("dyson"):
        reports += [verify_dyson(L, M) for L, M in DEFAULT_GRID["dyson"]]
    if want("jacobi"):
        reports += [verify_jacobi(L, M, a, b) for L, M, a, b in DEFAULT_GRID["jacobi"]]
        reports += [
            verify_jacobi(L, M, a, b, family="shifted")
            for L, M, a, b in DEFAULT_GRID["jacobi-shifted"]
        ]
    if want("gaussian"):
        reports += [verify_gaussian_monomial(L, M) for L, M in DEFAULT_GRID["gaussian"]]
    if want("hermite"):
        reports += [verify_hermite(L, M) for L, M in DEFAULT_GRID["hermite"]]
    if want("r1"):
        reports += [verify_r1(L, M) for L, M in DEFAULT_GRID["r1"]]
    if want("zero"):
        reports += [verify_zero(N, L) for N, L in DEFAULT_GRID["zero"]]
    if want("pfaffian"):
        reports += [verify_pfaffian_examples(M) for M in DEFAULT_GRID["pfaffian"]]
    return reports
