"""Command-line surface: exponent series tables, class expansions in the
creation-operator basis, cup products, and the verification suites.

Every invocation emits a single deterministic JSON document on stdout (or to
--out).  Exit status is nonzero exactly when input is invalid or a
verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .exact import parse_rational
from .hilbert import TANGENT, TAUTOLOGICAL, ClassSpec, builtin_f, cup_basis, tangent_g, taut_g
from .series import TruncatedSeries
from .verify import run_suite
from .fock import FockElement
from .hilbert import hilbert_class

DEFAULT_ORDER = 12

CLASS_NAMES = ("chern", "segre", "sqrt-todd", "cprime-pow", "custom")


def _parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"partition must be a JSON array of integers: {text!r}") from exc
    if not isinstance(parts, list) or not all(isinstance(p, int) for p in parts):
        raise ValueError(f"partition must be a JSON array of integers: {text!r}")
    return tuple(parts)


def _defining_series(args, min_order: int) -> TruncatedSeries:
    if args.class_name == "custom":
        if args.f is None:
            raise ValueError("class 'custom' requires --f c0,c1,...")
        coeffs = [parse_rational(c) for c in args.f.split(",")]
        if not coeffs or coeffs[0] != 1:
            raise ValueError("custom series must have leading coefficient 1")
        order = max(min_order, len(coeffs) - 1)
        return TruncatedSeries.from_coeffs(coeffs, order)
    if args.class_name == "cprime-pow" and args.r is None:
        raise ValueError("class 'cprime-pow' requires --r p/q")
    r = parse_rational(args.r) if args.r is not None else None
    return builtin_f(args.class_name, min_order, r)


def _document(request: dict, payload) -> dict:
    return {"request": request, "payload": payload, "engine": f"hilbclass {__version__}"}


def _emit(doc: dict, out_path: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_gseries(args) -> int:
    order = args.order
    f = _defining_series(args, max(order - 1, 0))
    g = tangent_g(f, order) if args.target == TANGENT else taut_g(f, order)
    payload = [str(c) for c in g.coeffs[1:]]
    request = {
        "subcommand": "gseries", "class": args.class_name, "target": args.target,
        "order": order, "r": args.r, "f": args.f,
    }
    _emit(_document(request, payload), args.out)
    return 0


def cmd_class(args) -> int:
    bound = args.weight
    f = _defining_series(args, max(bound - 1, 0))
    element = hilbert_class(ClassSpec(f, args.target), bound)
    if args.weight_only is not None:
        element = element.component(args.weight_only)
    if args.degree is not None:
        element = element.degree_component(args.degree)
    request = {
        "subcommand": "class", "class": args.class_name, "target": args.target,
        "weight": bound, "degree": args.degree, "r": args.r, "f": args.f,
    }
    _emit(_document(request, element.to_records()), args.out)
    return 0


def cmd_cup(args) -> int:
    nu = _parse_partition(args.partition_a)
    nu2 = _parse_partition(args.partition_b)
    result = cup_basis(nu, nu2)
    request = {"subcommand": "cup", "a": list(nu), "b": list(nu2)}
    _emit(_document(request, result.to_records()), args.out)
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite)
    payload = [c.as_dict() for c in checks]
    request = {"subcommand": "verify", "suite": args.suite}
    _emit(_document(request, payload), args.out)
    return 0 if all(c.passed for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbclass",
        description="Multiplicative classes and cup products on Hilbert "
                    "schemes of points on the affine plane, exactly.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_class_args(p):
        p.add_argument("class_name", choices=CLASS_NAMES, metavar="class",
                       help="one of " + ", ".join(CLASS_NAMES))
        p.add_argument("target", choices=(TANGENT, TAUTOLOGICAL))
        p.add_argument("--r", help="exponent p/q for cprime-pow")
        p.add_argument("--f", help="comma-separated coefficients for custom")

    p = sub.add_parser("gseries", help="exponent series g_1..g_N of a class")
    add_class_args(p)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gseries)

    p = sub.add_parser("class", help="class expansion in the creation basis")
    add_class_args(p)
    p.add_argument("--weight", type=int, default=DEFAULT_ORDER,
                   help="weight truncation bound N")
    p.add_argument("--weight-only", type=int, default=None, dest="weight_only",
                   help="restrict the output to one weight")
    p.add_argument("--degree", type=int, default=None,
                   help="restrict the output to one algebraic degree")
    p.add_argument("--out")
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("cup", help="cup product of two basis monomials")
    p.add_argument("partition_a", help="JSON array, e.g. [2,1]")
    p.add_argument("partition_b", help="JSON array, e.g. [2,1]")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("appendix", "oracle", "examples", "ring",
                                     "crossoracle", "all"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
