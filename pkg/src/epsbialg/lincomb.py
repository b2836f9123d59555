"""Finitely supported linear combinations over basis keys, and tensor powers.

Three basis-key families are supported:

* ``EMatrix(i, j, n)`` -- elementary matrices of the n-by-n matrix algebra,
  with the delta product rule E[i,j]E[k,l] = delta_jk E[i,l];
* ``Word(letters)`` -- words over a finite ordered alphabet, multiplied by
  concatenation, the empty word being the unit;
* ``UnivarMonomial(e)`` -- powers x^e of a single commuting variable.

An ``Element`` is a map key -> LambdaPoly; a ``TensorElement`` is a map from
k-tuples of keys (k >= 2, the tensor legs) to LambdaPoly.  Both are
immutable by convention: nothing in this package mutates them after
construction, so they can be shared freely between tasks.

A ``Kind`` value identifies the owning algebra (dimension, alphabet, ...)
and carries its product rule and unit.  Coproducts live elsewhere: several
coalgebra structures can sit on top of the same kind.

The tensor square A (x) A is an (A,A)-bimodule via

    a . (b (x) c) = ab (x) c        (``act_left``)
    (b (x) c) . a = b (x) ca        (``act_right``)
"""

from __future__ import annotations

import itertools

from .errors import AlphabetMismatch, DimensionMismatch, KindMismatch
from .scalars import LambdaPoly, ONE, poly_text


# ---------------------------------------------------------------------------
# basis keys
# ---------------------------------------------------------------------------

class EMatrix:
    """Elementary matrix E[i,j] of M_n: single 1 in row i, column j (1-based)."""

    __slots__ = ("i", "j", "n", "_hash")

    def __init__(self, i: int, j: int, n: int):
        if not (1 <= i <= n and 1 <= j <= n):
            raise DimensionMismatch(f"E[{i},{j}] out of range for dimension {n}")
        self.i = i
        self.j = j
        self.n = n
        self._hash = hash((i, j, n))

    def __eq__(self, other):
        return (
            isinstance(other, EMatrix)
            and self.i == other.i
            and self.j == other.j
            and self.n == other.n
        )

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.i, self.j)

    def __repr__(self):
        return f"EMatrix({self.i}, {self.j}, {self.n})"


class Word:
    """A word over a finite alphabet, stored as a tuple of 0-based letter indices."""

    __slots__ = ("letters", "_hash")

    def __init__(self, letters=()):
        self.letters = tuple(letters)
        self._hash = hash(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.letters)

    def sort_key(self):
        return (len(self.letters), self.letters)

    def __repr__(self):
        return f"Word({self.letters!r})"


class UnivarMonomial:
    """The monomial x^exponent of the one-variable polynomial algebra."""

    __slots__ = ("exponent", "_hash")

    def __init__(self, exponent: int):
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        self.exponent = exponent
        self._hash = hash(exponent)

    def __eq__(self, other):
        return isinstance(other, UnivarMonomial) and self.exponent == other.exponent

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (self.exponent,)

    def __repr__(self):
        return f"UnivarMonomial({self.exponent})"


# ---------------------------------------------------------------------------
# kinds: the underlying algebras
# ---------------------------------------------------------------------------

class MatrixKind:
    """The matrix algebra M_n over Q[L], in the elementary-matrix basis."""

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 1:
            raise DimensionMismatch(f"matrix dimension must be >= 1, got {n}")
        self.n = n

    def __eq__(self, other):
        return isinstance(other, MatrixKind) and self.n == other.n

    def __hash__(self):
        return hash(("matrix", self.n))

    def selector(self) -> str:
        return f"matrix:{self.n}"

    def key_mul(self, p: EMatrix, q: EMatrix):
        """Delta rule: E[i,j]E[k,l] = E[i,l] if j = k, else zero (None)."""
        if p.j != q.i:
            return None
        return EMatrix(p.i, q.j, self.n)

    def unit_terms(self):
        # the identity matrix, expanded eagerly into basis terms
        return {EMatrix(i, i, self.n): ONE for i in range(1, self.n + 1)}

    def validate_key(self, key):
        if not isinstance(key, EMatrix) or key.n != self.n:
            raise KindMismatch(f"{key!r} is not a basis key of {self.selector()}")

    def key_text(self, key: EMatrix) -> str:
        return f"E[{key.i},{key.j}]"

    finite_basis = True

    def basis_keys(self, bound=None):
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                yield EMatrix(i, j, self.n)


class WordKind:
    """The free algebra on a finite ordered alphabet, in the word basis."""

    __slots__ = ("alphabet",)

    def __init__(self, alphabet):
        letters = tuple(alphabet)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(letters)) != len(letters) or any(not s for s in letters):
            raise ValueError(f"letter names must be distinct and nonempty: {letters!r}")
        for s in letters:
            if s.lower() in ("l", "lambda"):
                raise ValueError(f"letter name {s!r} collides with the weight literal")
        self.alphabet = letters

    def __eq__(self, other):
        return isinstance(other, WordKind) and self.alphabet == other.alphabet

    def __hash__(self):
        return hash(("word", self.alphabet))

    def selector(self) -> str:
        if all(len(s) == 1 for s in self.alphabet):
            return "word:" + "".join(self.alphabet)
        return "word:" + ",".join(self.alphabet)

    def key_mul(self, p: Word, q: Word):
        return Word(p.letters + q.letters)

    def unit_terms(self):
        return {Word(): ONE}

    def validate_key(self, key):
        if not isinstance(key, Word) or any(
            not (0 <= a < len(self.alphabet)) for a in key.letters
        ):
            raise KindMismatch(f"{key!r} is not a basis key of {self.selector()}")

    def key_text(self, key: Word) -> str:
        if not key.letters:
            return "1"
        return "*".join(self.alphabet[a] for a in key.letters)

    finite_basis = False

    def basis_keys(self, bound=6):
        """All words of length <= bound, in length-then-lexicographic order."""
        indices = range(len(self.alphabet))
        for length in range(bound + 1):
            for letters in itertools.product(indices, repeat=length):
                yield Word(letters)


class UnivarKind:
    """The one-variable polynomial algebra Q[L][x], in the monomial basis."""

    __slots__ = ()

    def __eq__(self, other):
        return isinstance(other, UnivarKind)

    def __hash__(self):
        return hash("univar")

    def selector(self) -> str:
        return "univar"

    def key_mul(self, p: UnivarMonomial, q: UnivarMonomial):
        return UnivarMonomial(p.exponent + q.exponent)

    def unit_terms(self):
        return {UnivarMonomial(0): ONE}

    def validate_key(self, key):
        if not isinstance(key, UnivarMonomial):
            raise KindMismatch(f"{key!r} is not a basis key of univar")

    def key_text(self, key: UnivarMonomial) -> str:
        if key.exponent == 0:
            return "1"
        if key.exponent == 1:
            return "x"
        return f"x^{key.exponent}"

    finite_basis = False

    def basis_keys(self, bound=6):
        for e in range(bound + 1):
            yield UnivarMonomial(e)


def ensure_same_kind(a, b):
    """Raise the most specific mismatch error unless a and b share a kind."""
    if a.kind == b.kind:
        return
    if isinstance(a.kind, MatrixKind) and isinstance(b.kind, MatrixKind):
        raise DimensionMismatch(f"mixed matrix dimensions {a.kind.n} and {b.kind.n}")
    if isinstance(a.kind, WordKind) and isinstance(b.kind, WordKind):
        raise AlphabetMismatch(
            f"mixed alphabets {a.kind.alphabet} and {b.kind.alphabet}"
        )
    raise KindMismatch(f"mixed algebra kinds {a.kind.selector()} and {b.kind.selector()}")


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------

def _normalized(terms):
    return {k: c for k, c in terms.items() if not c.is_zero()}


class Element:
    """A finitely supported linear combination of basis keys over Q[L]."""

    __slots__ = ("kind", "terms")

    def __init__(self, kind, terms=None):
        self.kind = kind
        clean = {}
        if terms:
            for key, c in terms.items():
                kind.validate_key(key)
                c = LambdaPoly.coerce(c)
                if not c.is_zero():
                    clean[key] = c
        self.terms = clean

    @classmethod
    def _make(cls, kind, terms):
        # internal: terms already normalized and validated
        out = cls.__new__(cls)
        out.kind = kind
        out.terms = terms
        return out

    @classmethod
    def zero(cls, kind):
        return cls._make(kind, {})

    @classmethod
    def from_key(cls, kind, key, coeff=ONE):
        kind.validate_key(key)
        coeff = LambdaPoly.coerce(coeff)
        return cls._make(kind, {} if coeff.is_zero() else {key: coeff})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.kind == other.kind and self.terms == other.terms

    def __hash__(self):
        return hash((self.kind, frozenset(self.terms.items())))

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        ensure_same_kind(self, other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            s = terms.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return Element._make(self.kind, terms)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Element._make(self.kind, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = LambdaPoly.coerce(c)
        if c.is_zero():
            return Element.zero(self.kind)
        return Element._make(
            self.kind, _normalized({k: v * c for k, v in self.terms.items()})
        )

    def __mul__(self, other):
        if isinstance(other, Element):
            ensure_same_kind(self, other)
            key_mul = self.kind.key_mul
            terms = {}
            for p, cp in self.terms.items():
                for q, cq in other.terms.items():
                    key = key_mul(p, q)
                    if key is None:
                        continue
                    c = cp * cq
                    s = terms.get(key)
                    s = c if s is None else s + c
                    if s.is_zero():
                        terms.pop(key, None)
                    else:
                        terms[key] = s
            return Element._make(self.kind, terms)
        if isinstance(other, (int, LambdaPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LambdaPoly)):
            return self.scale(other)
        return NotImplemented

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __str__(self):
        return _combo_text(
            self.kind, ((key, c) for key, c in self.sorted_terms()), single_leg=True
        )

    def __repr__(self):
        return f"<Element {self.kind.selector()}: {self}>"


class TensorElement:
    """A linear combination of k-tuples of basis keys (k >= 2 tensor legs)."""

    __slots__ = ("kind", "legs", "terms")

    def __init__(self, kind, legs, terms=None):
        if legs < 2:
            raise KindMismatch(f"tensor must have at least 2 legs, got {legs}")
        self.kind = kind
        self.legs = legs
        clean = {}
        if terms:
            for keys, c in terms.items():
                if len(keys) != legs:
                    raise KindMismatch(f"tuple {keys!r} does not have {legs} legs")
                for key in keys:
                    kind.validate_key(key)
                c = LambdaPoly.coerce(c)
                if not c.is_zero():
                    clean[tuple(keys)] = c
        self.terms = clean

    @classmethod
    def _make(cls, kind, legs, terms):
        out = cls.__new__(cls)
        out.kind = kind
        out.legs = legs
        out.terms = terms
        return out

    @classmethod
    def zero(cls, kind, legs=2):
        return cls._make(kind, legs, {})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.legs == other.legs
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.kind, self.legs, frozenset(self.terms.items())))

    def _check_compatible(self, other):
        ensure_same_kind(self, other)
        if self.legs != other.legs:
            raise KindMismatch(f"mixed leg counts {self.legs} and {other.legs}")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for keys, c in other.terms.items():
            s = terms.get(keys)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(keys, None)
            else:
                terms[keys] = s
        return TensorElement._make(self.kind, self.legs, terms)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TensorElement._make(
            self.kind, self.legs, {k: -c for k, c in self.terms.items()}
        )

    def scale(self, c) -> "TensorElement":
        c = LambdaPoly.coerce(c)
        if c.is_zero():
            return TensorElement.zero(self.kind, self.legs)
        return TensorElement._make(
            self.kind, self.legs, _normalized({k: v * c for k, v in self.terms.items()})
        )

    def __mul__(self, other):
        if isinstance(other, (int, LambdaPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: tuple(key.sort_key() for key in kv[0]),
        )

    def __str__(self):
        return _combo_text(self.kind, self.sorted_terms(), single_leg=False)

    def __repr__(self):
        return f"<TensorElement {self.kind.selector()} legs={self.legs}: {self}>"


# ---------------------------------------------------------------------------
# tensor product and bimodule actions
# ---------------------------------------------------------------------------

def _as_tuples(v):
    """View an Element or TensorElement as (legs, {key-tuple: coeff})."""
    if isinstance(v, Element):
        return 1, {(k,): c for k, c in v.terms.items()}
    return v.legs, v.terms


def tensor(u, v) -> TensorElement:
    """Bilinear tensor product; legs concatenate."""
    ensure_same_kind(u, v)
    lu, tu = _as_tuples(u)
    lv, tv = _as_tuples(v)
    terms = {}
    for ku, cu in tu.items():
        for kv, cv in tv.items():
            c = cu * cv
            if not c.is_zero():
                terms[ku + kv] = c
    return TensorElement._make(u.kind, lu + lv, terms)


def act_left(a: Element, t: TensorElement) -> TensorElement:
    """Left bimodule action a.(b (x) c) = ab (x) c, extended bilinearly."""
    ensure_same_kind(a, t)
    if t.legs != 2:
        raise KindMismatch(f"bimodule action needs 2 legs, got {t.legs}")
    key_mul = a.kind.key_mul
    terms = {}
    for p, cp in a.terms.items():
        for (k1, k2), ct in t.terms.items():
            key = key_mul(p, k1)
            if key is None:
                continue
            c = cp * ct
            keys = (key, k2)
            s = terms.get(keys)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(keys, None)
            else:
                terms[keys] = s
    return TensorElement._make(a.kind, 2, terms)


def act_right(t: TensorElement, a: Element) -> TensorElement:
    """Right bimodule action (b (x) c).a = b (x) ca, extended bilinearly."""
    ensure_same_kind(t, a)
    if t.legs != 2:
        raise KindMismatch(f"bimodule action needs 2 legs, got {t.legs}")
    key_mul = a.kind.key_mul
    terms = {}
    for (k1, k2), ct in t.terms.items():
        for q, cq in a.terms.items():
            key = key_mul(k2, q)
            if key is None:
                continue
            c = ct * cq
            keys = (k1, key)
            s = terms.get(keys)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(keys, None)
            else:
                terms[keys] = s
    return TensorElement._make(t.kind, 2, terms)


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------

def _coeff_prefix(c: LambdaPoly):
    """Render a coefficient as (sign, prefix-text); prefix '' means coefficient 1."""
    items = list(c.items())
    if len(items) == 1:
        deg, q = items[0]
        sign = "-" if q < 0 else "+"
        q = abs(q)
        if deg == 0:
            text = "" if q == 1 else str(q)
        else:
            sym = "L" if deg == 1 else f"L^{deg}"
            text = sym if q == 1 else f"{q}*{sym}"
        return sign, text
    return "+", f"({poly_text(c)})"


def _combo_text(kind, sorted_terms, single_leg):
    parts = []
    for key, c in sorted_terms:
        if single_leg:
            body = kind.key_text(key)
        else:
            body = " (x) ".join(kind.key_text(k) for k in key)
        sign, prefix = _coeff_prefix(c)
        if prefix:
            body = f"{prefix} * {body}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" + {body}" if sign == "+" else f" - {body}")
    return "".join(parts) if parts else "0"
