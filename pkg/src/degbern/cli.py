"""Command line front end.

Subcommands:

    expand   expand an expression in the (order-r) degenerate Bernoulli basis
    verify   run the identity corpus, in full or per identity
    table    print number/polynomial family tables

Exit codes are a contract: 0 success, 1 usage or parse error,
2 verification failure (identity failure or route disagreement),
3 internal consistency failure (an exact division failed).

All numbers in machine-readable output are serialized as strings to keep
arbitrary precision across tools.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .core import ExactDivisionError, LambdaPoly
from .expansion import BasisExpansion, RouteMismatchError, crosscheck, expand
from .families import (
    bernoulli_number,
    bernoulli_poly_order,
    deg_bernoulli_order,
    deg_falling,
    euler_number,
    genocchi_number,
    scaled_bernoulli,
)
from .identities import DEFAULT_BOUNDS, identity_ids, identity_params, verify, verify_all
from .parser import ParseError, parse_poly

__all__ = [
    "document_to_expansion",
    "expansion_to_document",
    "lambda_poly_from_pairs",
    "lambda_poly_to_pairs",
    "main",
]


# -- expansion documents -------------------------------------------------------


def lambda_poly_to_pairs(p: LambdaPoly) -> list[list[str]]:
    """[[exponent, coefficient], ...] as strings, sorted by exponent."""
    return [[str(exp), str(coeff)] for exp, coeff in p.items()]


def lambda_poly_from_pairs(pairs: Sequence[Sequence[str]]) -> LambdaPoly:
    return LambdaPoly({int(exp): Fraction(coeff) for exp, coeff in pairs})


def expansion_to_document(source: str, e: BasisExpansion) -> dict:
    return {
        "input": source,
        "order": str(e.order),
        "degree": str(e.degree),
        "coefficients": [
            {"k": str(k), "lambda_poly": lambda_poly_to_pairs(c)}
            for k, c in enumerate(e.coeffs)
        ],
        "tool_version": __version__,
    }


def document_to_expansion(doc: dict) -> BasisExpansion:
    coeffs = [LambdaPoly.zero()] * (int(doc["degree"]) + 1)
    for entry in doc["coefficients"]:
        coeffs[int(entry["k"])] = lambda_poly_from_pairs(entry["lambda_poly"])
    return BasisExpansion(
        order=int(doc["order"]),
        degree=int(doc["degree"]),
        coeffs=tuple(coeffs),
        routes=("document",) * len(coeffs),
    )


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _latex_lambda_poly(p: LambdaPoly) -> str:
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for exp, coeff in reversed(p.items()):
        if exp == 0:
            body = _latex_rational(abs(coeff))
        else:
            lam = "\\lambda" if exp == 1 else f"\\lambda^{{{exp}}}"
            mag = abs(coeff)
            body = lam if mag == 1 else f"{_latex_rational(mag)}{lam}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(parts)


def _latex_expansion(e: BasisExpansion) -> str:
    terms = []
    for k, c in enumerate(e.coeffs):
        if c.is_zero:
            continue
        basis = f"\\beta_{{{k},\\lambda}}^{{({e.order})}}(x)" if e.order != 1 else f"\\beta_{{{k},\\lambda}}(x)"
        terms.append(f"\\left({_latex_lambda_poly(c)}\\right){basis}")
    body = " + ".join(terms) if terms else "0"
    return f"p(x) = {body}"


# -- argument plumbing -----------------------------------------------------------


class _Cli(argparse.ArgumentParser):
    """argparse variant whose usage errors exit 1, per the exit-code contract."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def _build_parser() -> _Cli:
    parser = _Cli(prog="degbern", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version=f"degbern {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand an expression in a degenerate Bernoulli basis")
    p_expand.add_argument("--expr", required=True, help="polynomial in x and l, e.g. 'x^2 - 1/2*B(3)'")
    p_expand.add_argument("--order", type=int, default=1, help="basis order r >= 1 (default 1)")
    p_expand.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_expand.add_argument(
        "--crosscheck",
        action="store_true",
        help="recompute through every route and fail (exit 2) on disagreement",
    )
    p_expand.add_argument(
        "--lambda",
        dest="lambda_sub",
        metavar="P/Q",
        help="also print the coefficients evaluated at l = P/Q",
    )
    p_expand.set_defaults(fn=_cmd_expand)

    p_verify = sub.add_parser("verify", help="verify identities from the corpus")
    p_verify.add_argument("ids", nargs="*", help="identity ids (default: all)")
    p_verify.add_argument("--id", action="append", dest="id_flags", default=[], help="identity id (repeatable)")
    p_verify.add_argument("--all", action="store_true", help="verify the whole corpus")
    p_verify.add_argument("--n-max", type=int, default=None, help="clamp the n sweep (m+n for product families)")
    p_verify.add_argument("--r-max", type=int, default=None, help="clamp the order sweep")
    p_verify.add_argument("--n", type=int, default=None, help="verify a single case with this n")
    p_verify.add_argument("--m", type=int, default=None, help="single-case m (product families)")
    p_verify.add_argument("--r", type=int, default=None, help="single-case order r")
    p_verify.add_argument("--a", type=int, default=None, help="single-case iterate count a")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument(
        "--perturb",
        action="store_true",
        help="add 1 to every right-hand side; forces failures (harness self-test)",
    )
    p_verify.set_defaults(fn=_cmd_verify)

    p_table = sub.add_parser("table", help="print a family table")
    p_table.add_argument("--family", required=True)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--order", type=int, default=1, help="order/scale for parametrized families")
    p_table.add_argument("--format", choices=("text", "json"), default="text")
    p_table.set_defaults(fn=_cmd_table)
    return parser


def _cmd_expand(args: argparse.Namespace) -> int:
    if args.order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return 1
    p = parse_poly(args.expr)
    if p.is_zero:
        print("error: cannot expand the zero polynomial", file=sys.stderr)
        return 1
    if args.crosscheck:
        e = crosscheck(p, args.order)
    else:
        e = expand(p, args.order)

    lam_value = Fraction(args.lambda_sub) if args.lambda_sub is not None else None
    if args.format == "json":
        doc = expansion_to_document(args.expr, e)
        if lam_value is not None:
            doc["lambda_value"] = str(lam_value)
            doc["coefficients_at_lambda"] = [
                {"k": str(k), "value": str(c.subs(lam_value))} for k, c in enumerate(e.coeffs)
            ]
        print(json.dumps(doc, indent=2))
    elif args.format == "latex":
        print(_latex_expansion(e))
    else:
        print(f"input: {args.expr}")
        print(f"p(x) = {p}")
        print(f"order: {e.order}   degree: {e.degree}")
        for k, c in enumerate(e.coeffs):
            line = f"a_{k} = {c}"
            if lam_value is not None:
                line += f"   [l={lam_value}: {c.subs(lam_value)}]"
            print(line)
    return 0


def _case_params(args: argparse.Namespace, wanted: tuple[str, ...]) -> dict[str, int]:
    given = {name: getattr(args, name) for name in ("n", "m", "r", "a")}
    return {name: value for name, value in given.items() if value is not None and name in wanted}


def _cmd_verify(args: argparse.Namespace) -> int:
    ids = list(args.ids) + list(args.id_flags)
    known = identity_ids()
    for identity_id in ids:
        if identity_id not in known:
            print(f"error: unknown identity {identity_id!r}; known: {', '.join(known)}", file=sys.stderr)
            return 1
    if not ids or args.all:
        ids = list(known)

    single = any(getattr(args, name) is not None for name in ("n", "m", "r", "a"))
    if single:
        cases = []
        for identity_id in sorted(set(ids)):
            params = _case_params(args, identity_params(identity_id))
            cases.append(verify(identity_id, params, perturb=args.perturb))
    else:
        bounds: dict[str, dict[str, int]] = {}
        for identity_id in ids:
            override = {}
            if args.n_max is not None:
                override["n_max"] = args.n_max
            if args.r_max is not None:
                if "r_max" in DEFAULT_BOUNDS[identity_id]:
                    override["r_max"] = args.r_max
                if "a_max" in DEFAULT_BOUNDS[identity_id]:
                    override["a_max"] = args.r_max
            if override:
                bounds[identity_id] = override
        cases = verify_all(bounds or None, ids=sorted(set(ids)), perturb=args.perturb)

    failures = [c for c in cases if not c.passed]
    if args.format == "json":
        payload = [
            {
                "id": c.id,
                "params": {name: str(value) for name, value in c.params},
                "passed": c.passed,
                "discrepancy": str(c.discrepancy),
                "offending_term": c.offending_term(),
            }
            for c in cases
        ]
        print(json.dumps({"cases": payload, "failures": len(failures)}, indent=2))
    else:
        for c in cases:
            status = "PASS" if c.passed else f"FAIL  discrepancy leads with {c.offending_term()}"
            print(f"{c.id}({c.param_str()}): {status}")
        print(f"{len(cases)} case(s), {len(failures)} failure(s)")
    return 0 if not failures else 2


_NUMBER_FAMILIES = {
    "bernoulli": bernoulli_number,
    "euler": euler_number,
    "genocchi": genocchi_number,
}


def _poly_family(name: str, order: int):
    if name == "bernoulli-order":
        return lambda n: bernoulli_poly_order(n, order)
    if name == "deg-bernoulli":
        return lambda n: deg_bernoulli_order(n, 1)
    if name == "deg-bernoulli-order":
        return lambda n: deg_bernoulli_order(n, order)
    if name == "deg-falling":
        return deg_falling
    if name == "scaled-bernoulli":
        return lambda n: scaled_bernoulli(n, order)
    return None


def _cmd_table(args: argparse.Namespace) -> int:
    if args.n_max < 0:
        print("error: --n-max must be >= 0", file=sys.stderr)
        return 1
    family = args.family
    if family in _NUMBER_FAMILIES:
        values = [_NUMBER_FAMILIES[family](n) for n in range(args.n_max + 1)]
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "family": family,
                        "entries": [{"n": str(n), "value": str(v)} for n, v in enumerate(values)],
                    },
                    indent=2,
                )
            )
        else:
            for n, v in enumerate(values):
                print(f"{n}: {v}")
        return 0
    maker = _poly_family(family, args.order)
    if maker is None:
        known = sorted(list(_NUMBER_FAMILIES) + [
            "bernoulli-order", "deg-bernoulli", "deg-bernoulli-order", "deg-falling", "scaled-bernoulli",
        ])
        print(f"error: unknown family {family!r}; known: {', '.join(known)}", file=sys.stderr)
        return 1
    polys = [maker(n) for n in range(args.n_max + 1)]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "family": family,
                    "order": str(args.order),
                    "entries": [
                        {
                            "n": str(n),
                            "coefficients": [
                                {"k": str(k), "lambda_poly": lambda_poly_to_pairs(c)}
                                for k, c in enumerate(p.coeffs)
                            ],
                        }
                        for n, p in enumerate(polys)
                    ],
                },
                indent=2,
            )
        )
    else:
        for n, p in enumerate(polys):
            print(f"{n}: {p}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except RouteMismatchError as exc:
        print(f"route disagreement: {exc}", file=sys.stderr)
        return 2
    except ExactDivisionError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
