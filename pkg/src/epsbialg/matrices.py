"""The matrix-algebra instances.

M_n carries several coalgebra structures on the elementary-matrix basis
E[i,j] (product rule E[i,j]E[k,l] = delta_jk E[i,l]):

* the signed telescoping coproduct

      Delta(E[i,j]) =  sum_{s=i}^{j-1} E[i,s] (x) E[s+1,j]   if i < j
                       0                                     if i = j
                      -sum_{s=j}^{i-1} E[i,s] (x) E[s+1,j]   if i > j

  which makes M_n a weight-zero unitary instance (``matrix_algebra``);

* the classical comatrix coproduct Delta(E[i,j]) = sum_s E[i,s] (x) E[s,j]
  with counit eps(E[i,j]) = delta_ij, shipped for contrast
  (``classical_comatrix_algebra``) -- it is coassociative and counital but
  is NOT a weighted derivation;

* the L-coproduct Delta(M) = ML (x) L - L (x) LM for a fixed L with L^2 = 0,
  realised as the derived coproduct attached to r = L (x) L
  (``l_coproduct_instance``).
"""

from __future__ import annotations

from .core import AlgebraInstance, coproduct_from_r
from .errors import DimensionMismatch, LSquareNotZero
from .lincomb import Element, EMatrix, MatrixKind, TensorElement, act_left, act_right, tensor
from .scalars import LambdaPoly, ONE, ZERO


def sgn(x: int) -> int:
    """Sign of an integer: 1, 0 or -1."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def newtonian_coproduct(key: EMatrix) -> TensorElement:
    """The signed telescoping coproduct on an elementary matrix."""
    i, j, n = key.i, key.j, key.n
    kind = MatrixKind(n)
    if i == j:
        return TensorElement.zero(kind)
    if i < j:
        sign, lo, hi = ONE, i, j - 1
    else:
        sign, lo, hi = -ONE, j, i - 1
    terms = {
        (EMatrix(i, s, n), EMatrix(s + 1, j, n)): sign for s in range(lo, hi + 1)
    }
    return TensorElement._make(kind, 2, terms)


def matrix_algebra(n: int) -> AlgebraInstance:
    """M_n with the telescoping coproduct; a weight-zero unitary instance."""
    return AlgebraInstance(
        MatrixKind(n), ZERO, newtonian_coproduct, selector=f"matrix:{n}"
    )


def classical_comatrix_coproduct(key: EMatrix) -> TensorElement:
    """Delta(E[i,j]) = sum_{s=1}^{n} E[i,s] (x) E[s,j]."""
    i, j, n = key.i, key.j, key.n
    kind = MatrixKind(n)
    terms = {(EMatrix(i, s, n), EMatrix(s, j, n)): ONE for s in range(1, n + 1)}
    return TensorElement._make(kind, 2, terms)


def classical_counit(key: EMatrix) -> LambdaPoly:
    """eps(E[i,j]) = delta_ij."""
    return ONE if key.i == key.j else ZERO


def classical_comatrix_algebra(n: int) -> AlgebraInstance:
    """M_n with the classical comatrix coproduct, for contrast.

    Coassociative and counital, but not a weighted derivation for any
    weight; only the coalgebra-side checkers are meaningful on it.
    """
    return AlgebraInstance(
        MatrixKind(n),
        ZERO,
        classical_comatrix_coproduct,
        selector=f"comatrix:{n}",
    )


def counit_contract_left(t: TensorElement, counit=classical_counit) -> Element:
    """(eps (x) id) applied to a 2-leg tensor."""
    out = {}
    for (k1, k2), c in t.terms.items():
        v = c * counit(k1)
        if v.is_zero():
            continue
        s = out.get(k2)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k2, None)
        else:
            out[k2] = s
    return Element._make(t.kind, out)


def counit_contract_right(t: TensorElement, counit=classical_counit) -> Element:
    """(id (x) eps) applied to a 2-leg tensor."""
    out = {}
    for (k1, k2), c in t.terms.items():
        v = c * counit(k2)
        if v.is_zero():
            continue
        s = out.get(k1)
        s = v if s is None else s + v
        if s.is_zero():
            out.pop(k1, None)
        else:
            out[k1] = s
    return Element._make(t.kind, out)


def l_coproduct_instance(n: int, L: Element) -> AlgebraInstance:
    """M_n with Delta(M) = ML (x) L - L (x) LM for a fixed L with L^2 = 0.

    Identical to the derived coproduct attached to r = L (x) L at weight 0;
    the identity ML (x) L - L (x) LM = M.(L (x) L) - (L (x) L).M is asserted
    on every basis key at construction time.
    """
    if not isinstance(L, Element) or not isinstance(L.kind, MatrixKind) or L.kind.n != n:
        raise DimensionMismatch(f"L must be an element of matrix:{n}")
    if not (L * L).is_zero():
        raise LSquareNotZero(f"L^2 != 0 for L = {L}")
    base = matrix_algebra(n)
    r = tensor(L, L)
    inst = coproduct_from_r(base, r, ZERO, selector=f"lmatrix:{n}:{L}")
    for key in inst.basis_keys():
        m = inst.element(key)
        direct = tensor(m * L, L) - tensor(L, L * m)
        assert direct == act_left(m, r) - act_right(r, m), key
    return inst


def matrix_from_rows(rows) -> Element:
    """Convert dense integer rows [[1,0],[1,0]] into the E-basis."""
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise DimensionMismatch(f"expected a square matrix, got rows {rows!r}")
    kind = MatrixKind(n)
    terms = {}
    for i, row in enumerate(rows, start=1):
        for j, value in enumerate(row, start=1):
            c = LambdaPoly.coerce(value)
            if not c.is_zero():
                terms[EMatrix(i, j, n)] = c
    return Element._make(kind, terms)


def random_integer_matrix(n: int, rng, low: int = -9, high: int = 9) -> Element:
    """A dense matrix with entries drawn from rng.randint(low, high)."""
    return matrix_from_rows(
        [[rng.randint(low, high) for _ in range(n)] for _ in range(n)]
    )
