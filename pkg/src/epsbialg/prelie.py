"""Pre-Lie product and Lie bracket induced by a weight-zero instance.

For a weight-zero unitary instance the Sweedler sandwich

    a |> b = sum b_(1) a b_(2)

is a (left) pre-Lie product, and [a, b] = a |> b - b |> a is a Lie bracket.
On the telescoping matrix instance the bracket admits two closed forms on
elementary matrices, implemented as independent code paths:

* ``matrix_bracket_closed_form`` -- the summarised sign form with exact
  half-integer sign conditions such as (i - k + 1/2)(i - l + 1/2) < 0,
  evaluated in rational arithmetic;
* ``matrix_bracket_table`` -- the five-case table it sums up.

The table is the oracle and the sign form the formula under test: any
disagreement between the paths is a finding to report, never to patch over.
Both differ from the classical commutator delta_jk E[i,l] - delta_li E[k,j].
"""

from __future__ import annotations

from fractions import Fraction

from .core import AlgebraInstance, LawReport
from .errors import DimensionMismatch, WeightNotZero
from .lincomb import Element, EMatrix, MatrixKind
from .matrices import matrix_algebra, sgn
from .scalars import ONE

_HALF = Fraction(1, 2)


def _require_weight_zero(A: AlgebraInstance):
    if not A.weight.is_zero():
        raise WeightNotZero(
            f"pre-Lie structure needs weight 0, instance has weight {A.weight}"
        )


def prelie_product(A: AlgebraInstance, a: Element, b: Element) -> Element:
    """a |> b = sum b_(1) a b_(2), extended bilinearly."""
    _require_weight_zero(A)
    A._own(a)
    A._own(b)
    out = Element.zero(A.kind)
    for (k1, k2), c in A.coproduct(b).terms.items():
        out = out + (A.element(k1) * a * A.element(k2)).scale(c)
    return out


def commutator_bracket(A: AlgebraInstance, a: Element, b: Element) -> Element:
    """[a, b] = a |> b - b |> a."""
    return prelie_product(A, a, b) - prelie_product(A, b, a)


def _check_same_n(p: EMatrix, q: EMatrix):
    if p.n != q.n:
        raise DimensionMismatch(f"mixed matrix dimensions {p.n} and {q.n}")


def matrix_prelie_table(p: EMatrix, q: EMatrix) -> Element:
    """Closed form of E[i,j] |> E[k,l] on the telescoping matrix instance:

    E[k,l] if k < j = i+1 <= l;  -E[k,l] if l < j = i+1 <= k;  else 0.
    """
    _check_same_n(p, q)
    i, j, k, l = p.i, p.j, q.i, q.j
    kind = MatrixKind(p.n)
    if j == i + 1 and k < j <= l:
        return Element._make(kind, {q: ONE})
    if j == i + 1 and l < j <= k:
        return Element._make(kind, {q: -ONE})
    return Element.zero(kind)


def matrix_bracket_table(p: EMatrix, q: EMatrix) -> Element:
    """Five-case table for [E[i,j], E[k,l]] on the telescoping matrix instance."""
    _check_same_n(p, q)
    i, j, k, l = p.i, p.j, q.i, q.j
    kind = MatrixKind(p.n)
    if j == i + 1 and l == k + 1 and j == l:
        return Element._make(kind, {q: ONE}) - Element._make(kind, {p: ONE})
    if k < j == i + 1 <= l and l != k + 1:
        return Element._make(kind, {q: ONE})
    if l < j == i + 1 <= k:
        return Element._make(kind, {q: -ONE})
    if i < l == k + 1 <= j and j != i + 1:
        return Element._make(kind, {p: -ONE})
    if j < l == k + 1 <= i:
        return Element._make(kind, {p: ONE})
    return Element.zero(kind)


def matrix_bracket_closed_form(p: EMatrix, q: EMatrix) -> Element:
    """Summarised sign form of the same bracket, with half-integer conditions."""
    _check_same_n(p, q)
    i, j, k, l = p.i, p.j, q.i, q.j
    kind = MatrixKind(p.n)
    if j == i + 1 and l != k + 1 and (i - k + _HALF) * (i - l + _HALF) < 0:
        s = sgn(l - k)
        if s:
            return Element._make(kind, {q: ONE if s > 0 else -ONE})
        return Element.zero(kind)
    if j != i + 1 and l == k + 1 and (k - i + _HALF) * (k - j + _HALF) < 0:
        s = sgn(i - j)
        if s:
            return Element._make(kind, {p: ONE if s > 0 else -ONE})
        return Element.zero(kind)
    return Element.zero(kind)


def bilinear_from_pairs(a: Element, b: Element, rule) -> Element:
    """Extend a basis-pair rule (key, key) -> Element bilinearly to elements."""
    out = Element.zero(a.kind)
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            out = out + rule(p, q).scale(cp * cq)
    return out


def classical_matrix_bracket(p: EMatrix, q: EMatrix) -> Element:
    """The classical commutator [E[i,j], E[k,l]] = delta_jk E[i,l] - delta_li E[k,j]."""
    _check_same_n(p, q)
    kind = MatrixKind(p.n)
    out = Element.zero(kind)
    if p.j == q.i:
        out = out + Element.from_key(kind, EMatrix(p.i, q.j, p.n))
    if q.j == p.i:
        out = out - Element.from_key(kind, EMatrix(q.i, p.j, p.n))
    return out


# ---------------------------------------------------------------------------
# law checkers
# ---------------------------------------------------------------------------

def check_prelie_identity(A, a: Element, b: Element, c: Element) -> LawReport:
    """(a|>b)|>c - a|>(b|>c) == (b|>a)|>c - b|>(a|>c)."""
    rhd = lambda u, v: prelie_product(A, u, v)
    diff = rhd(rhd(a, b), c) - rhd(a, rhd(b, c)) - rhd(rhd(b, a), c) + rhd(b, rhd(a, c))
    if diff.is_zero():
        return LawReport.ok("prelie")
    return LawReport.fail("prelie", (str(a), str(b), str(c)), diff)


def check_jacobi(A, a: Element, b: Element, c: Element) -> LawReport:
    """[[a,b],c] + [[b,c],a] + [[c,a],b] == 0."""
    br = lambda u, v: commutator_bracket(A, u, v)
    total = br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)
    if total.is_zero():
        return LawReport.ok("jacobi")
    return LawReport.fail("jacobi", (str(a), str(b), str(c)), total)


def check_left_representation(A, a: Element, b: Element, x: Element) -> LawReport:
    """[a,b]|>x == a|>(b|>x) - b|>(a|>x)."""
    rhd = lambda u, v: prelie_product(A, u, v)
    diff = rhd(commutator_bracket(A, a, b), x) - rhd(a, rhd(b, x)) + rhd(b, rhd(a, x))
    if diff.is_zero():
        return LawReport.ok("representation")
    return LawReport.fail("representation", (str(a), str(b), str(x)), diff)


# ---------------------------------------------------------------------------
# structure-constant tables
# ---------------------------------------------------------------------------

class BracketTable:
    """Structure constants pair-of-keys -> Element, antisymmetric by construction.

    Construction validates [p,q] = -[q,p] term-wise on every stored pair and
    rejects tables that break it.
    """

    def __init__(self, constants):
        self.constants = dict(constants)
        for (p, q), value in self.constants.items():
            mirror = self.constants.get((q, p))
            if mirror is None or mirror != -value:
                raise ValueError(f"bracket table not antisymmetric at ({p!r}, {q!r})")

    def __getitem__(self, pair):
        return self.constants[pair]

    def __len__(self):
        return len(self.constants)

    @classmethod
    def for_matrix(cls, n: int, method: str = "table") -> "BracketTable":
        """Full table for M_n via one of the three bracket code paths."""
        if method == "commutator":
            A = matrix_algebra(n)
            bracket = lambda p, q: commutator_bracket(A, A.element(p), A.element(q))
        elif method == "closed-form":
            bracket = matrix_bracket_closed_form
        elif method == "table":
            bracket = matrix_bracket_table
        else:
            raise ValueError(f"unknown bracket method {method!r}")
        kind = MatrixKind(n)
        keys = list(kind.basis_keys())
        return cls({(p, q): bracket(p, q) for p in keys for q in keys})
