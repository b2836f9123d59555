"""Free-algebra instances on words, and the one-variable polynomial algebra.

Words over a finite alphabet multiply by concatenation; w[i,j] selects the
contiguous letters i through j, 1-indexed inclusive, so that w[1,i] and
w[i,n] share letter i.  Three coalgebra structures are provided:

* ``word_algebra`` -- the weighted coproduct on words, for l(w) = n > 0

      Delta(w) = sum_{i=1}^{n} w[1,i] (x) w[i,n]
               + weight * sum_{i=1}^{n-1} w[1,i] (x) w[i+1,n]

  with Delta(1) = -weight * (1 (x) 1); the generic weight L by default;

* ``deconcat_algebra`` -- the prefix/suffix splitting
  Delta(v_1...v_n) = sum_{i=0}^{n} v_1...v_i (x) v_{i+1}...v_n, a weight -1
  instance;

* ``univar_algebra`` -- Q[L][x] with Delta(1) = -weight * (1 (x) 1) and

      Delta(x^n) = sum_{i=0}^{n-1} x^i (x) x^(n-1-i)
                 + weight * sum_{i=1}^{n-1} x^i (x) x^(n-i).

The single-letter word coproduct (Delta(x) = x (x) x) and the univariate one
(Delta(x) = 1 (x) 1) are different coalgebras; they are deliberately kept as
distinct instances.
"""

from __future__ import annotations

from .core import AlgebraInstance
from .errors import IndexOutOfRange
from .lincomb import TensorElement, UnivarKind, UnivarMonomial, Word, WordKind
from .scalars import LAMBDA, LambdaPoly, MINUS_ONE, ONE


def concat(w1: Word, w2: Word) -> Word:
    return Word(w1.letters + w2.letters)


def subword(w: Word, i: int, j: int) -> Word:
    """w[i,j]: letters i through j, 1-indexed inclusive; requires 1 <= i <= j <= l(w)."""
    if not (1 <= i <= j <= len(w.letters)):
        raise IndexOutOfRange(f"w[{i},{j}] undefined for a word of length {len(w.letters)}")
    return Word(w.letters[i - 1 : j])


def weighted_word_coproduct(w: Word, kind: WordKind, weight: LambdaPoly = LAMBDA) -> TensorElement:
    """The weighted splitting with shared letters; see the module docstring."""
    letters = w.letters
    n = len(letters)
    if n == 0:
        return TensorElement._make(kind, 2, _unit_square(kind, -weight))
    terms = {}
    for i in range(1, n + 1):
        terms[(Word(letters[:i]), Word(letters[i - 1 :]))] = ONE
    if not weight.is_zero():
        for i in range(1, n):
            terms[(Word(letters[:i]), Word(letters[i:]))] = weight
    return TensorElement._make(kind, 2, terms)


def deconcat_coproduct(w: Word, kind: WordKind) -> TensorElement:
    """All prefix/suffix splits, including the two trivial ones."""
    letters = w.letters
    terms = {}
    for i in range(len(letters) + 1):
        terms[(Word(letters[:i]), Word(letters[i:]))] = ONE
    return TensorElement._make(kind, 2, terms)


def univar_coproduct(m: UnivarMonomial, weight: LambdaPoly = LAMBDA) -> TensorElement:
    kind = UnivarKind()
    n = m.exponent
    if n == 0:
        return TensorElement._make(kind, 2, _unit_square(kind, -weight))
    terms = {}
    for i in range(n):
        terms[(UnivarMonomial(i), UnivarMonomial(n - 1 - i))] = ONE
    if not weight.is_zero():
        for i in range(1, n):
            terms[(UnivarMonomial(i), UnivarMonomial(n - i))] = weight
    return TensorElement._make(kind, 2, terms)


def _unit_square(kind, coeff: LambdaPoly):
    if coeff.is_zero():
        return {}
    (unit_key,) = kind.unit_terms()
    return {(unit_key, unit_key): coeff}


def word_algebra(alphabet, weight=None) -> AlgebraInstance:
    """The free algebra on the alphabet with the weighted word coproduct."""
    kind = WordKind(alphabet)
    w = LAMBDA if weight is None else LambdaPoly.coerce(weight)
    return AlgebraInstance(
        kind,
        w,
        lambda key: weighted_word_coproduct(key, kind, w),
        selector=kind.selector(),
    )


def deconcat_algebra(alphabet) -> AlgebraInstance:
    """The free algebra with the deconcatenation coproduct (weight -1)."""
    kind = WordKind(alphabet)
    return AlgebraInstance(
        kind,
        MINUS_ONE,
        lambda key: deconcat_coproduct(key, kind),
        selector="deconcat:" + kind.selector().split(":", 1)[1],
    )


def univar_algebra(weight=None) -> AlgebraInstance:
    """Q[L][x] with the weighted one-variable coproduct."""
    w = LAMBDA if weight is None else LambdaPoly.coerce(weight)
    return AlgebraInstance(
        UnivarKind(),
        w,
        lambda key: univar_coproduct(key, w),
        selector="univar",
        sweep_bound=4,
    )
