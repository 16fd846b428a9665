"""Command-line front end.

Subcommands
  paircorr   exact pair-correlation report (JSON/CSV/pretty)
  corr       general m-point data (m = 1 or 2, symbolic circular)
  gram       JSON dump of a Gram vector with sparsity statistics
  verify     run the hyperpfaffian identity grid (or one identity)
  oracle     brute-force constant-term cross-checks

Exit codes: 0 success, 2 validation error, 3 identity failure,
4 budget refusal.  JSON output is byte-identical across repeated runs
and across --threads settings: all arithmetic is exact and reductions
are merged in a fixed order.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .correlation import (
    angular_mass,
    correlation_at_points,
    fourier_coefficients,
    first_correlation_constant,
    pair_correlation,
    sample_for_plot,
)
from .errors import BudgetError
from .evaluations import (
    DEFAULT_GRID,
    default_grid,
    verify_dyson,
    verify_gaussian_monomial,
    verify_hermite,
    verify_jacobi,
    verify_pfaffian_examples,
    verify_r1,
    verify_zero,
)
from .gram import EnsembleSpec, gram_vector
from .moments import circular_weight, gaussian_weight, jacobi_weight
from .oracle import (
    circular_partition_ct,
    first_marginal_ct,
    pair_marginal_ct,
)
from .scalar import multinomial_central
from .wronskian import hermite_family, monomial_family

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IDENTITY = 3
EXIT_BUDGET = 4


class ValidationError(Exception):
    pass


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _require_even_square(beta):
    L = math.isqrt(beta)
    if L * L != beta or L % 2:
        raise ValidationError(
            f"beta must be an even perfect square (4, 16, 36, ...), got {beta}"
        )
    return L


def _cmd_paircorr(args):
    _require_even_square(args.beta)
    if args.M < 2:
        raise ValidationError("paircorr needs --M >= 2")
    report = pair_correlation(args.beta, args.M, threads=args.threads)
    payload = report.to_json_dict()
    mass = angular_mass(report)
    payload["angular_mass"] = {"num": str(mass.numerator), "den": str(mass.denominator)}
    if args.oracle:
        payload["oracle_agreement"] = pair_marginal_ct(args.beta, args.M) == report.r
    if args.format == "csv":
        samples = sample_for_plot(report, args.samples)
        rows = ["theta,value"] + [
            f"{t:.{args.precision}g},{v:.{args.precision}g}" for t, v in samples
        ]
        _emit("\n".join(rows) + "\n", args.out)
    elif args.format == "pretty":
        lines = [
            f"pair correlation, beta={args.beta}, M={args.M}",
            f"  normalization: {report.m_falling}/(2*pi*{report.central})",
            f"  r degree {report.r.degree}, leading {report.r.coeffs[-1]}, "
            f"constant {report.r.coefficient(0)}",
            f"  mass over [0,2*pi]: {mass} (expected {args.M * (args.M - 1)})",
        ]
        if args.oracle:
            lines.append(f"  oracle agreement: {payload['oracle_agreement']}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        if args.samples:
            payload["samples"] = [
                {"theta": round(t, 15), "value": v}
                for t, v in sample_for_plot(report, args.samples)
            ]
        _emit(_json_text(payload), args.out)
    if args.oracle and not payload.get("oracle_agreement", True):
        return EXIT_IDENTITY
    return EXIT_OK


def _cmd_corr(args):
    _require_even_square(args.beta)
    if args.m == 2:
        return _cmd_paircorr(args)
    if args.m != 1:
        raise ValidationError("corr supports --m 1 or --m 2")
    if args.M < 1:
        raise ValidationError("corr needs --M >= 1")
    value, pf = first_correlation_constant(args.beta, args.M)
    payload = {
        "beta": args.beta,
        "M": args.M,
        "m": 1,
        "value": str(value),
        "pinned_pf_coefficient": str(pf.coeffs[-1]),
        "pinned_pf_degree": pf.degree,
    }
    _emit(_json_text(payload), args.out)
    return EXIT_OK


_WEIGHTS = {
    "circular": lambda args: circular_weight(),
    "gaussian": lambda args: gaussian_weight(),
    "jacobi": lambda args: jacobi_weight(args.a, args.b),
}

_FAMILIES = {"monomial": monomial_family, "hermite": hermite_family}


def _cmd_gram(args):
    if args.L % 2 or args.L < 2:
        raise ValidationError("--L must be a positive even integer")
    if args.weight == "jacobi" and (args.a < 1 or args.b < 1):
        raise ValidationError("jacobi weight needs integer --a and --b >= 1")
    weight = _WEIGHTS[args.weight](args)
    family = _FAMILIES[args.family](args.L * args.M)
    spec = EnsembleSpec(args.L, args.M, weight, family)
    g = gram_vector(spec)
    dim = math.comb(spec.N, spec.L)
    payload = {
        "L": args.L,
        "M": args.M,
        "beta": spec.beta,
        "weight": weight.label(),
        "family": family.name,
        "term_count": g.support_size(),
        "basis_dimension": dim,
        "sparsity": f"{g.support_size()}/{dim}",
        "multivector": g.to_json_dict(),
    }
    _emit(_json_text(payload), args.out)
    return EXIT_OK


_SINGLE_IDENTITY = {
    "dyson": lambda a: verify_dyson(a.L, a.M),
    "jacobi": lambda a: verify_jacobi(a.L, a.M, a.a, a.b),
    "gaussian": lambda a: verify_gaussian_monomial(a.L, a.M),
    "hermite": lambda a: verify_hermite(a.L, a.M),
    "r1": lambda a: verify_r1(a.L, a.M),
    "zero": lambda a: verify_zero(a.N, a.L),
    "pfaffian": lambda a: verify_pfaffian_examples(a.M),
}


def _cmd_verify(args):
    if args.identity and (args.L or args.M or args.N):
        if args.identity not in _SINGLE_IDENTITY:
            raise ValidationError(
                f"unknown identity {args.identity!r}; choose from "
                f"{sorted(_SINGLE_IDENTITY)}"
            )
        reports = [_SINGLE_IDENTITY[args.identity](args)]
    elif args.identity:
        if args.identity not in DEFAULT_GRID and args.identity != "jacobi-shifted":
            raise ValidationError(f"unknown identity {args.identity!r}")
        reports = default_grid([args.identity])
    else:
        reports = default_grid()
    payload = [r.to_json_dict() for r in reports]
    _emit(_json_text(payload), args.out)
    failures = [r for r in reports if not r.passed]
    for r in failures:
        print(f"FAILED: {r.identity} {r.params}", file=sys.stderr)
    return EXIT_IDENTITY if failures else EXIT_OK


def _cmd_oracle(args):
    if args.beta % 2 or args.beta < 2:
        raise ValidationError("--beta must be a positive even integer")
    payload = {"beta": args.beta, "M": args.M}
    if args.what == "partition":
        z = circular_partition_ct(args.beta, args.M)
        payload["partition_function"] = f"{z.numerator}/{z.denominator}"
        L = math.isqrt(args.beta)
        if L * L == args.beta and L % 2 == 0:
            from .exterior import hyperpfaffian

            pf = hyperpfaffian(gram_vector(EnsembleSpec.circular(L, args.M)), args.M)
            from fractions import Fraction

            rhs = Fraction(multinomial_central(args.beta, args.M), math.factorial(args.M))
            payload["hyperpfaffian"] = str(pf)
            payload["closed_form"] = f"{rhs.numerator}/{rhs.denominator}"
            payload["three_way_agreement"] = z == pf == rhs
    elif args.what == "paircorr":
        r = pair_marginal_ct(args.beta, args.M)
        payload["m"] = 2
        payload["r_coeffs"] = [str(c) for c in r.coeffs]
        payload["fourier"] = [str(c) for c in fourier_coefficients(r)]
    else:  # r1
        v = first_marginal_ct(args.beta, args.M)
        payload["m"] = 1
        payload["value"] = f"{v.numerator}/{v.denominator}"
        payload["expected"] = str(args.M)
    _emit(_json_text(payload), args.out)
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hyperpf",
        description="Exact hyperpfaffian correlation engine for even-square-beta ensembles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("paircorr", help="exact pair correlation report")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--samples", type=int, default=0, help="plot sample count")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--precision", type=int, default=12, help="CSV decimal digits")
    p.add_argument("--oracle", action="store_true", help="cross-check against constant-term integration")
    common(p)
    p.set_defaults(func=_cmd_paircorr, m=2)

    p = sub.add_parser("corr", help="general m-point data (m = 1 or 2)")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--precision", type=int, default=12)
    p.add_argument("--oracle", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_corr)

    p = sub.add_parser("gram", help="dump a Gram vector")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--weight", choices=sorted(_WEIGHTS), default="circular")
    p.add_argument("--family", choices=sorted(_FAMILIES), default="monomial")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("verify", help="run hyperpfaffian identity checks")
    p.add_argument("--identity", default=None, help="restrict to one identity")
    p.add_argument("--L", type=int, default=0)
    p.add_argument("--M", type=int, default=0)
    p.add_argument("--N", type=int, default=0)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="constant-term brute-force checks")
    p.add_argument("--what", choices=("partition", "paircorr", "r1"), default="partition")
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--M", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
