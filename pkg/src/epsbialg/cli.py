"""Command-line surface.

Subcommands: ``coproduct``, ``antipode``, ``prelie``, ``bracket``,
``multiply``, ``verify``.  Algebra selectors:

    matrix:N                 telescoping coproduct on M_N, weight 0
    word:xy | word:x1,x2     weighted word coproduct (generic weight L,
                             override with --weight)
    univar                   one-variable coproduct (generic weight L)
    lmatrix:N:<expr>         L-coproduct on M_N for L = <expr>, L^2 = 0
    rmatrix:N:<r-expr>:<w>   derived coproduct for the 2-leg tensor <r-expr>
                             at weight <w>

Exit codes: 0 success, 1 law violation (including a non-truncating antipode
series), 2 usage or parse errors (including unconstructible selectors).
Output is deterministic: identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import antipode, coproduct_from_r
from .errors import (
    EpsBialgError,
    NotNilpotentWithinCap,
    ParseError,
    UnknownSuite,
)
from .lincomb import MatrixKind
from .matrices import l_coproduct_instance, matrix_algebra
from .parser import emit, parse_expression, parse_tensor
from .prelie import (
    bilinear_from_pairs,
    commutator_bracket,
    matrix_bracket_closed_form,
    matrix_bracket_table,
    prelie_product,
)
from .scalars import parse_scalar
from .verify import DEFAULT_SEED, SUITE_NAMES, run_verify
from .words import univar_algebra, word_algebra


def build_arg_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--algebra", "-a", required=True,
        help="algebra selector: matrix:N | word:<letters> | univar | "
             "lmatrix:N:<expr> | rmatrix:N:<r-expr>:<weight>",
    )
    common.add_argument(
        "--weight", default=None,
        help="weight override (word/univar selectors only), e.g. 0, -1, L",
    )
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument(
        "--cap", type=int, default=64,
        help="iteration cap for the antipode series (default 64)",
    )
    common.add_argument(
        "--max-len", type=int, default=6,
        help="bound for word-length / exponent sweeps (default 6)",
    )
    common.add_argument(
        "--seed", type=int, default=DEFAULT_SEED,
        help=f"seed for random-matrix checks (default {DEFAULT_SEED})",
    )

    parser = argparse.ArgumentParser(
        prog="epsbialg",
        description="Exact checks and computations for weighted "
                    "infinitesimal-bialgebra structures over Q[L].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coproduct", parents=[common], help="apply the coproduct")
    p.add_argument("--expr", "-e", required=True, help="element expression")

    p = sub.add_parser("antipode", parents=[common], help="apply the antipode series")
    p.add_argument("--expr", "-e", required=True, help="element expression")

    p = sub.add_parser("multiply", parents=[common], help="multiply two elements")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("prelie", parents=[common], help="pre-Lie product lhs |> rhs")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("bracket", parents=[common], help="Lie bracket [lhs, rhs]")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    route = p.add_mutually_exclusive_group()
    route.add_argument(
        "--closed-form", action="store_true",
        help="use the sign-condition closed form (matrix basis pairs)",
    )
    route.add_argument(
        "--table", action="store_true",
        help="use the five-case table (matrix basis pairs)",
    )

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument(
        "--suite", required=True,
        help="one of: " + ", ".join(SUITE_NAMES),
    )
    return parser


def build_algebra(selector: str, weight_text):
    if selector.startswith("matrix:"):
        _reject_weight(weight_text, "matrix")
        return matrix_algebra(_positive_int(selector.split(":", 1)[1], "matrix dimension"))
    if selector.startswith("word:"):
        letters = selector.split(":", 1)[1]
        alphabet = letters.split(",") if "," in letters else list(letters)
        weight = parse_scalar(weight_text) if weight_text is not None else None
        return word_algebra(alphabet, weight)
    if selector == "univar":
        weight = parse_scalar(weight_text) if weight_text is not None else None
        return univar_algebra(weight)
    if selector.startswith("lmatrix:"):
        _reject_weight(weight_text, "lmatrix")
        parts = selector.split(":", 2)
        if len(parts) != 3:
            raise ValueError(f"malformed selector {selector!r}; want lmatrix:N:<expr>")
        n = _positive_int(parts[1], "matrix dimension")
        base = matrix_algebra(n)
        return l_coproduct_instance(n, parse_expression(parts[2], base))
    if selector.startswith("rmatrix:"):
        _reject_weight(weight_text, "rmatrix (the selector carries the weight)")
        parts = selector.split(":")
        if len(parts) < 4:
            raise ValueError(
                f"malformed selector {selector!r}; want rmatrix:N:<r-expr>:<weight>"
            )
        n = _positive_int(parts[1], "matrix dimension")
        weight = parse_scalar(parts[-1])
        r_text = ":".join(parts[2:-1])
        base = matrix_algebra(n)
        r = parse_tensor(r_text, base)
        return coproduct_from_r(base, r, weight, selector=selector)
    raise ValueError(f"unknown algebra selector {selector!r}")


def _positive_int(text, what):
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None
    if value < 1:
        raise ValueError(f"{what} must be >= 1, got {value}")
    return value


def _reject_weight(weight_text, which):
    if weight_text is not None:
        raise ValueError(f"--weight is not meaningful for {which} selectors")


def _fmt(args):
    return "json" if args.json else "text"


def _cmd_coproduct(args, algebra):
    value = algebra.coproduct(parse_expression(args.expr, algebra))
    print(emit(value, _fmt(args), algebra))
    return 0


def _cmd_antipode(args, algebra):
    value = antipode(algebra, parse_expression(args.expr, algebra), args.cap)
    print(emit(value, _fmt(args), algebra))
    return 0


def _cmd_multiply(args, algebra):
    value = algebra.multiply(
        parse_expression(args.lhs, algebra), parse_expression(args.rhs, algebra)
    )
    print(emit(value, _fmt(args), algebra))
    return 0


def _cmd_prelie(args, algebra):
    value = prelie_product(
        algebra, parse_expression(args.lhs, algebra), parse_expression(args.rhs, algebra)
    )
    print(emit(value, _fmt(args), algebra))
    return 0


def _cmd_bracket(args, algebra):
    lhs = parse_expression(args.lhs, algebra)
    rhs = parse_expression(args.rhs, algebra)
    if args.closed_form or args.table:
        if not isinstance(algebra.kind, MatrixKind):
            raise ValueError("--closed-form/--table apply to matrix algebras only")
        rule = matrix_bracket_closed_form if args.closed_form else matrix_bracket_table
        value = bilinear_from_pairs(lhs, rhs, rule)
    else:
        value = commutator_bracket(algebra, lhs, rhs)
    print(emit(value, _fmt(args), algebra))
    return 0


def _cmd_verify(args, algebra):
    passed, outcomes = run_verify(
        args.suite, algebra, max_len=args.max_len, cap=args.cap, seed=args.seed
    )
    if args.json:
        payload = {
            "algebra": algebra.selector,
            "suites": [
                {
                    "suite": o.suite,
                    "status": o.status,
                    "detail": o.detail,
                    "witness": str(o.failure.witness)
                    if o.failure is not None and o.failure.witness is not None
                    else None,
                }
                for o in outcomes
            ],
            "passed": passed,
        }
        print(json.dumps(payload, indent=2))
    else:
        for outcome in outcomes:
            print(outcome.line())
        print("result: " + ("ok" if passed else "LAW VIOLATION"))
    return 0 if passed else 1


_COMMANDS = {
    "coproduct": _cmd_coproduct,
    "antipode": _cmd_antipode,
    "multiply": _cmd_multiply,
    "prelie": _cmd_prelie,
    "bracket": _cmd_bracket,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        algebra = build_algebra(args.algebra, args.weight)
        return _COMMANDS[args.command](args, algebra)
    except NotNilpotentWithinCap as exc:
        print(f"law failure: {exc}", file=sys.stderr)
        return 1
    except UnknownSuite as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, EpsBialgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
