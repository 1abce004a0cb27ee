"""Command-line front end: compute, decompose, verify, and scan.

Partitions on the command line are comma-separated descending integers;
the empty partition is spelled `-`.  Exit codes: 0 on success, 1 on
invalid input, 2 when a verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import (
    ClassFunction,
    induced_trivial_character,
    irreducible_character,
    monomial_character,
    sign_character,
    trivial_character,
)
from .immanant_characters import (
    hook_decomposition,
    immanant_character,
    is_abelian,
    is_dahlberg_small,
    is_preabelian,
)
from .jacobitrudi import hess_prime, hessenberg_from_skew, immanant, jt_matrix, NotHessenbergError
from .symfunc import convert
from .tableaux import SkewShape, check_partition, kostka, partitions_of, skew_shape
from .verify import run_suites, scan_records


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def parse_partition(text: str):
    if text == "-" or text == "":
        return ()
    try:
        return check_partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise SystemExit(f"invalid partition {text!r}: {exc}")


def _shape_from_args(args) -> SkewShape:
    outer = parse_partition(args.outer)
    inner = parse_partition(args.inner) if args.inner else ()
    try:
        return skew_shape(outer, inner, args.rows)
    except ValueError as exc:
        raise SystemExit(f"invalid shape: {exc}")


def _parse_character(spec: str, n: int) -> ClassFunction:
    if spec == "sgn":
        return sign_character(n)
    if spec == "triv":
        return trivial_character(n)
    for prefix, builder in (
        ("irr:", irreducible_character),
        ("mono:", monomial_character),
        ("eta:", induced_trivial_character),
    ):
        if spec.startswith(prefix):
            lam = parse_partition(spec[len(prefix):])
            if sum(lam) != n:
                raise SystemExit(
                    f"character index {list(lam)} is a partition of {sum(lam)}, need {n}"
                )
            return builder(lam)
    raise SystemExit(f"unknown character {spec!r}; use sgn|triv|irr:LAM|mono:LAM|eta:LAM")


def _print_class_function(chi: ClassFunction, fmt: str) -> None:
    if fmt == "json":
        print(_dumps(chi.to_json()))
        return
    width = max(len(str(list(r))) for r in chi.values)
    for rho in partitions_of(chi.n):
        print(f"{str(list(rho)).ljust(width)}  {chi.values[rho]}")


def cmd_kostka(args) -> int:
    theta = parse_partition(args.theta)
    content = tuple(int(x) for x in args.content.split(",")) if args.content not in ("-", "") else ()
    value = kostka(theta, content)
    if args.format == "json":
        print(_dumps({"theta": list(theta), "content": list(content), "kostka": value}))
    else:
        print(value)
    return 0


def cmd_matrix(args) -> int:
    shape = _shape_from_args(args)
    matrix = jt_matrix(shape)
    if args.format == "json":
        print(_dumps({"shape": shape.to_json(), **matrix.to_json()}))
    else:
        print(matrix.render())
    return 0


def cmd_hessenberg(args) -> int:
    shape = _shape_from_args(args)
    h = hessenberg_from_skew(shape)
    try:
        prime = list(hess_prime(shape).values)
    except NotHessenbergError:
        prime = None
    payload = {
        "shape": shape.to_json(),
        "h": list(h.values),
        "h_prime": prime,
        "abelian": is_abelian(h),
        "preabelian": is_preabelian(shape) if not shape.has_empty_rows else None,
        "dahlberg_small": is_dahlberg_small(h),
    }
    if args.format == "json":
        print(_dumps(payload))
    else:
        print(f"h = {tuple(h.values)}")
        print(f"h' = {tuple(prime) if prime else 'undefined'}")
        print(f"abelian={payload['abelian']} preabelian={payload['preabelian']} "
              f"dahlberg_small={payload['dahlberg_small']}")
    return 0


def cmd_immanant(args) -> int:
    shape = _shape_from_args(args)
    chi = _parse_character(args.char, shape.rows)
    f = immanant(chi, shape)
    if args.basis != "h":
        f = convert(f, args.basis)
    if args.format == "json":
        print(_dumps({"shape": shape.to_json(), "char": args.char, **f.to_json()}))
    else:
        print(str(f))
    return 0


def cmd_gamma(args) -> int:
    shape = _shape_from_args(args)
    theta = parse_partition(args.theta)
    if sum(theta) != shape.size:
        raise SystemExit(
            f"theta sums to {sum(theta)} but the shape has {shape.size} boxes"
        )
    gamma = immanant_character(theta, shape)
    _print_class_function(gamma, args.format)
    return 0


def cmd_decompose(args) -> int:
    shape = _shape_from_args(args)
    theta = parse_partition(args.theta)
    try:
        decomp = hook_decomposition(theta, shape)
    except ValueError as exc:
        raise SystemExit(str(exc))
    if args.format == "json":
        print(_dumps(decomp.to_json()))
    else:
        print(f"h = {tuple(decomp.base.values)}  leg = {decomp.leg}")
        for h, mult in decomp.summands:
            print(f"{mult} x {h}")
    return 0


def cmd_verify(args) -> int:
    suites = [s.strip() for s in args.suite.split(",")]
    try:
        reports = run_suites(suites, args.max_n, args.max_size)
    except ValueError as exc:
        raise SystemExit(str(exc))
    payload = [r.to_json() for r in reports]
    if args.format == "json":
        print(_dumps(payload))
    else:
        for r in reports:
            status = "ok" if r.ok else f"{len(r.failures)} FAILURES"
            print(f"{r.name}: {r.instances} instances, {status}")
    return 0 if all(r.ok for r in reports) else 2


def cmd_scan(args) -> int:
    for record in scan_records(args.max_n, args.max_size):
        print(_dumps(record))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are invalid input, not check failures
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="immanants",
        description="Exact immanant characters of Jacobi-Trudi matrices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_shape_args(p):
        p.add_argument("--outer", required=True, help="outer partition, e.g. 3,3,3,1")
        p.add_argument("--inner", default="-", help="inner partition (default empty)")
        p.add_argument("--rows", type=int, default=None, help="row count (pads with empty rows)")

    def add_format(p):
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("kostka", help="count semistandard tableaux")
    p.add_argument("--theta", required=True)
    p.add_argument("--content", required=True)
    add_format(p)
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("matrix", help="render the Jacobi-Trudi matrix of a shape")
    add_shape_args(p)
    add_format(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("hessenberg", help="nonzero pattern of a shape's matrix")
    add_shape_args(p)
    add_format(p)
    p.set_defaults(func=cmd_hessenberg)

    p = sub.add_parser("immanant", help="immanant of a shape's Jacobi-Trudi matrix")
    add_shape_args(p)
    p.add_argument("--char", required=True, help="sgn|triv|irr:LAM|mono:LAM|eta:LAM")
    p.add_argument("--basis", choices=("m", "h", "s", "p"), default="h")
    add_format(p)
    p.set_defaults(func=cmd_immanant)

    p = sub.add_parser("gamma", help="immanant character of a shape at theta")
    add_shape_args(p)
    p.add_argument("--theta", required=True)
    add_format(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("decompose", help="hook expansion into Stanley-Stembridge characters")
    add_shape_args(p)
    p.add_argument("--theta", required=True)
    add_format(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all",
                   help="comma-separated: kostka,characters,immanant,hook,reductions,positivity,all")
    p.add_argument("--max-n", type=int, default=4, dest="max_n")
    p.add_argument("--max-size", type=int, default=7, dest="max_size")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="stream evidence records for bounded instances")
    p.add_argument("--max-n", type=int, default=3, dest="max_n")
    p.add_argument("--max-size", type=int, default=5, dest="max_size")
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        if isinstance(exc.code, int):
            return exc.code
        print(exc.code, file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
