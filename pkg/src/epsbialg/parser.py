"""Expression parsing and canonical emission for the CLI surface.

Grammar (juxtaposition is never multiplication; ``*`` is mandatory):

    expr    := ['-'] tensor (('+'|'-') tensor)*
    tensor  := term ('(x)' term)*
    term    := factor ('*' factor)*
    factor  := base ['^' int]
    base    := int ['/' int]               rational scalar
             | 'L'                         the weight symbol (alias 'lambda')
             | 'E' '[' int ',' int ']'     elementary matrix (matrix kinds)
             | 'E'                         the identity matrix (matrix kinds)
             | letter                      alphabet letter, or 'x' for univar
             | '[' row (',' row)* ']'      dense integer matrix rows
             | '(' expr ')'

``(x)`` acts as the tensor separator only in operator position (after a
complete term), so it never collides with a parenthesised letter ``(x)``
at operand position.  A bare scalar evaluates to scalar * unit.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .core import LawReport
from .errors import DimensionMismatch, ParseError, UnknownAtom
from .lincomb import Element, EMatrix, MatrixKind, TensorElement, UnivarKind, UnivarMonomial, Word, WordKind, tensor
from .scalars import LAMBDA, LambdaPoly, ONE, poly_json, poly_text

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()\[\],+\-*/^]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                offset = len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {rest.strip()[0]!r}", pos + offset)
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _ExprParser:
    def __init__(self, text: str, algebra):
        self.algebra = algebra
        self.kind = algebra.kind
        self.tokens = _tokenize(text)
        self.i = 0

    # -- token plumbing ----------------------------------------------------

    def peek(self, ahead=0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, *ops):
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def expect_int(self, what):
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected {what}", pos)
        return val

    def at_tensor_sep(self):
        k0, v0, _ = self.peek(0)
        k1, v1, _ = self.peek(1)
        k2, v2, _ = self.peek(2)
        return (
            k0 == "op" and v0 == "(" and k1 == "name" and v1 == "x"
            and k2 == "op" and v2 == ")"
        )

    # -- grammar -----------------------------------------------------------

    def parse(self):
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input after expression", pos)
        return value

    def expr(self):
        if self.at_op("-"):
            self.take()
            value = self._neg(self.tensor_term())
        else:
            value = self.tensor_term()
        while self.at_op("+", "-"):
            _, op, pos = self.take()
            rhs = self.tensor_term()
            value = self._add(value, rhs if op == "+" else self._neg(rhs), pos)
        return value

    def tensor_term(self):
        value = self.term()
        while self.at_tensor_sep():
            _, _, pos = self.take()
            self.take()
            self.take()
            value = self._tensor(value, self.term(), pos)
        return value

    def term(self):
        value = self.factor()
        while self.at_op("*"):
            _, _, pos = self.take()
            value = self._mul(value, self.factor(), pos)
        return value

    def factor(self):
        value = self.base()
        if self.at_op("^"):
            _, _, pos = self.take()
            exp = self.expect_int("a non-negative integer exponent")
            if isinstance(value, TensorElement):
                raise ParseError("cannot exponentiate a tensor", pos)
            out = ONE if isinstance(value, LambdaPoly) else self.algebra.unit
            for _ in range(exp):
                out = self._mul(out, value, pos)
            return out
        return value

    def base(self):
        kind, val, pos = self.take()
        if kind == "int":
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "/":
                self.take()
                den = self.expect_int("a denominator")
                if den == 0:
                    raise ParseError("zero denominator", pos)
                return LambdaPoly.const(Fraction(val, den))
            return LambdaPoly.const(val)
        if kind == "name":
            return self.atom(val, pos)
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        if kind == "op" and val == "[":
            return self.dense_matrix(pos)
        raise ParseError("expected a scalar, an atom, or '('", pos)

    def atom(self, name, pos):
        if name.lower() in ("l", "lambda"):
            return LAMBDA
        k = self.kind
        if isinstance(k, WordKind):
            if name in k.alphabet:
                return Element.from_key(k, Word((k.alphabet.index(name),)))
            raise UnknownAtom(f"unknown letter {name!r} in {k.selector()}", pos)
        if isinstance(k, UnivarKind):
            if name == "x":
                return Element.from_key(k, UnivarMonomial(1))
            raise UnknownAtom(f"unknown atom {name!r} in univar", pos)
        if isinstance(k, MatrixKind):
            if name == "E":
                if self.at_op("["):
                    self.take()
                    i = self.expect_int("a row index")
                    self.expect_op(",")
                    j = self.expect_int("a column index")
                    self.expect_op("]")
                    if not (1 <= i <= k.n and 1 <= j <= k.n):
                        raise DimensionMismatch(
                            f"E[{i},{j}] out of range for {k.selector()}"
                        )
                    return Element.from_key(k, EMatrix(i, j, k.n))
                return self.algebra.unit
            raise UnknownAtom(f"unknown atom {name!r} in {k.selector()}", pos)
        raise UnknownAtom(f"unknown atom {name!r}", pos)

    def dense_matrix(self, pos):
        if not isinstance(self.kind, MatrixKind):
            raise ParseError("dense matrix rows are only valid in matrix algebras", pos)
        rows = [self.dense_row()]
        while self.at_op(","):
            self.take()
            rows.append(self.dense_row())
        self.expect_op("]")
        n = self.kind.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch(
                f"expected a {n}x{n} matrix, got rows of shape {[len(r) for r in rows]}"
            )
        from .matrices import matrix_from_rows

        return matrix_from_rows(rows)

    def dense_row(self):
        self.expect_op("[")
        row = [self.dense_entry()]
        while self.at_op(","):
            self.take()
            row.append(self.dense_entry())
        self.expect_op("]")
        return row

    def dense_entry(self):
        negative = False
        if self.at_op("-"):
            self.take()
            negative = True
        value = self.expect_int("an integer entry")
        return -value if negative else value

    # -- value arithmetic ---------------------------------------------------

    def _promote(self, v):
        if isinstance(v, LambdaPoly):
            return self.algebra.unit.scale(v)
        return v

    def _neg(self, v):
        return -v

    def _add(self, x, y, pos):
        if isinstance(x, LambdaPoly) and isinstance(y, LambdaPoly):
            return x + y
        if isinstance(x, TensorElement) != isinstance(y, TensorElement):
            raise ParseError("cannot add a tensor to a non-tensor", pos)
        return self._promote(x) + self._promote(y)

    def _mul(self, x, y, pos):
        if isinstance(x, LambdaPoly) and isinstance(y, LambdaPoly):
            return x * y
        if isinstance(x, LambdaPoly):
            return y.scale(x)
        if isinstance(y, LambdaPoly):
            return x.scale(y)
        if isinstance(x, TensorElement) or isinstance(y, TensorElement):
            raise ParseError("cannot multiply tensors; use the '(x)' separator", pos)
        return x * y

    def _tensor(self, x, y, pos):
        x = self._promote(x)
        y = self._promote(y)
        return tensor(x, y)


def parse_value(text: str, algebra):
    """Parse to an Element or TensorElement (scalars promote via the unit)."""
    value = _ExprParser(text, algebra).parse()
    if isinstance(value, LambdaPoly):
        return algebra.unit.scale(value)
    return value


def parse_expression(text: str, algebra) -> Element:
    """Parse to an Element in canonical form; tensors are rejected."""
    value = parse_value(text, algebra)
    if isinstance(value, TensorElement):
        raise ParseError("expected an element, got a tensor expression", 0)
    return value


def parse_tensor(text: str, algebra) -> TensorElement:
    """Parse to a 2-leg TensorElement, as required for a derived coproduct."""
    value = parse_value(text, algebra)
    if not isinstance(value, TensorElement) or value.legs != 2:
        raise ParseError("expected a 2-leg tensor expression", 0)
    return value


# ---------------------------------------------------------------------------
# canonical emission
# ---------------------------------------------------------------------------

def _value_json(value, algebra=None):
    kind = value.kind
    if isinstance(value, Element):
        rows = [
            {"coeff": poly_json(c), "legs": [kind.key_text(key)]}
            for key, c in value.sorted_terms()
        ]
    else:
        rows = [
            {"coeff": poly_json(c), "legs": [kind.key_text(k) for k in keys]}
            for keys, c in value.sorted_terms()
        ]
    return {
        "algebra": algebra.selector if algebra is not None else kind.selector(),
        "weight": poly_text(algebra.weight) if algebra is not None else None,
        "terms": rows,
    }


def _report_json(report: LawReport):
    witness = None
    if report.witness is not None:
        witness = {
            "inputs": list(report.witness.inputs),
            "difference": str(report.witness.difference),
        }
    return {"law": report.law, "passed": report.passed, "witness": witness}


def emit(value, fmt: str = "text", algebra=None) -> str:
    """Canonical text or JSON for an Element, TensorElement, or LawReport."""
    if fmt == "text":
        if isinstance(value, LawReport):
            return value.summary()
        if isinstance(value, LambdaPoly):
            return poly_text(value)
        return str(value)
    if fmt == "json":
        if isinstance(value, LawReport):
            obj = _report_json(value)
        elif isinstance(value, LambdaPoly):
            obj = poly_json(value)
        else:
            obj = _value_json(value, algebra)
        return json.dumps(obj, indent=2)
    raise ValueError(f"unknown format {fmt!r}")
