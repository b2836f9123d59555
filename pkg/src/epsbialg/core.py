"""Generic machinery over a bundled algebra-with-coproduct instance.

An ``AlgebraInstance`` packages one coalgebra structure sitting on top of a
``Kind``: the kind's product and unit, a basis coproduct rule, and a weight
in Q[L].  Everything downstream is generic in the instance:

* linear extension of the coproduct and its iterates;
* the weighted-derivation law checker
      Delta(ab) = a.Delta(b) + Delta(a).b + weight * (a (x) b)
  and the coassociativity checker (Delta (x) id) Delta = (id (x) Delta) Delta;
* convolution  f * g = m (f (x) g) Delta  and circular convolution
  f (*) g = f * g + f + g  on linear endomorphisms, whose unit is 0;
* D = m Delta, local nilpotency detection, and the antipode series
      S = -sum_{t>=0} (1/t!) (-D)^t
  which truncates exactly at the least k with D^k(a) = 0;
* the derived coproduct  Delta_r(a) = a.r - r.a - weight * (a (x) 1)
  attached to an element r of the tensor square.

Checkers return a ``LawReport`` rather than raising: a failing law is a
result, not an error.  Reports carry the first failing witness so that a
broken instance reproduces deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import KindMismatch, NotNilpotentWithinCap, WeightNotZero
from .lincomb import Element, TensorElement, act_left, act_right, tensor
from .scalars import LambdaPoly


@dataclass(frozen=True)
class Witness:
    """The offending inputs (already rendered to text) and the nonzero difference."""

    inputs: tuple
    difference: object

    def __str__(self):
        ins = ", ".join(self.inputs)
        return f"inputs ({ins}): difference = {self.difference}"


@dataclass(frozen=True)
class LawReport:
    law: str
    passed: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.passed

    @classmethod
    def ok(cls, law):
        return cls(law, True, None)

    @classmethod
    def fail(cls, law, inputs, difference):
        return cls(law, False, Witness(tuple(str(x) for x in inputs), difference))

    def summary(self) -> str:
        if self.passed:
            return f"pass: {self.law}"
        return f"FAIL: {self.law}; {self.witness}"


class AlgebraInstance:
    """One weighted unital algebra-and-coproduct bundle over Q[L].

    ``basis_coproduct`` maps a basis key to a 2-leg TensorElement; it is
    extended linearly and memoized per instance.  Construction checks that
    the kind's product is associative and that the unit is two-sided, on the
    whole basis when it is finite and on a bounded sweep otherwise.
    """

    def __init__(self, kind, weight, basis_coproduct, selector=None, sweep_bound=2):
        self.kind = kind
        self.weight = LambdaPoly.coerce(weight)
        self._rule = basis_coproduct
        self.selector = selector or kind.selector()
        self.unit = Element._make(kind, kind.unit_terms())
        self._memo = {}
        self._validate_algebra(sweep_bound)

    def _validate_algebra(self, sweep_bound):
        keys = list(self.kind.basis_keys(sweep_bound))
        key_mul = self.kind.key_mul
        for p in keys:
            e = Element.from_key(self.kind, p)
            if self.unit * e != e or e * self.unit != e:
                raise KindMismatch(f"unit is not a two-sided identity at {p!r}")
        for p in keys:
            for q in keys:
                pq = key_mul(p, q)
                for r in keys:
                    qr = key_mul(q, r)
                    left = key_mul(pq, r) if pq is not None else None
                    right = key_mul(p, qr) if qr is not None else None
                    if left != right:
                        raise KindMismatch(
                            f"product not associative on ({p!r}, {q!r}, {r!r})"
                        )

    def basis_keys(self, bound=6):
        return self.kind.basis_keys(bound)

    def element(self, key, coeff=1) -> Element:
        return Element.from_key(self.kind, key, LambdaPoly.coerce(coeff))

    def _own(self, v):
        if v.kind != self.kind:
            raise KindMismatch(
                f"{self.selector} cannot operate on a value of kind {v.kind.selector()}"
            )

    def multiply(self, a: Element, b: Element) -> Element:
        self._own(a)
        self._own(b)
        return a * b

    def basis_coproduct(self, key) -> TensorElement:
        t = self._memo.get(key)
        if t is None:
            t = self._rule(key)
            self._memo[key] = t
        return t

    def coproduct(self, a: Element) -> TensorElement:
        """Linear extension of the basis coproduct; Delta(0) = 0."""
        self._own(a)
        out = {}
        for key, c in a.terms.items():
            for keys, d in self.basis_coproduct(key).terms.items():
                v = c * d
                s = out.get(keys)
                s = v if s is None else s + v
                if s.is_zero():
                    out.pop(keys, None)
                else:
                    out[keys] = s
        return TensorElement._make(self.kind, 2, out)

    def _expand_leg(self, t: TensorElement, pos: int) -> TensorElement:
        """Apply the coproduct to leg ``pos``, yielding one more leg."""
        out = {}
        for keys, c in t.terms.items():
            for (u, v), d in self.basis_coproduct(keys[pos]).terms.items():
                new = keys[:pos] + (u, v) + keys[pos + 1 :]
                w = c * d
                s = out.get(new)
                s = w if s is None else s + w
                if s.is_zero():
                    out.pop(new, None)
                else:
                    out[new] = s
        return TensorElement._make(self.kind, t.legs + 1, out)

    def iterated_coproduct(self, a: Element, k: int) -> TensorElement:
        """Delta applied k times (k >= 1), always expanding the leftmost leg.

        By coassociativity the expansion position is immaterial; fixing the
        leftmost leg makes the output deterministic even on instances that
        fail coassociativity.
        """
        if k < 1:
            raise ValueError(f"iterated coproduct needs k >= 1, got {k}")
        t = self.coproduct(a)
        for _ in range(k - 1):
            t = self._expand_leg(t, 0)
        return t

    def __repr__(self):
        return f"<AlgebraInstance {self.selector} weight={self.weight}>"


# ---------------------------------------------------------------------------
# law checkers
# ---------------------------------------------------------------------------

def check_cocycle(A: AlgebraInstance, p, q) -> LawReport:
    """The weighted-derivation law on a basis pair:

    Delta(ab) - a.Delta(b) - Delta(a).b - weight * (a (x) b) == 0 in Q[L].
    """
    a = A.element(p)
    b = A.element(q)
    diff = A.coproduct(a * b) - act_left(a, A.coproduct(b)) - act_right(A.coproduct(a), b)
    if not A.weight.is_zero():
        diff = diff - tensor(a, b).scale(A.weight)
    if diff.is_zero():
        return LawReport.ok("cocycle")
    return LawReport.fail("cocycle", (A.kind.key_text(p), A.kind.key_text(q)), diff)


def check_coassoc(A: AlgebraInstance, key) -> LawReport:
    """(Delta (x) id) Delta == (id (x) Delta) Delta on a basis key."""
    t = A.basis_coproduct(key)
    diff = A._expand_leg(t, 0) - A._expand_leg(t, 1)
    if diff.is_zero():
        return LawReport.ok("coassoc")
    return LawReport.fail("coassoc", (A.kind.key_text(key),), diff)


# ---------------------------------------------------------------------------
# linear endomorphisms, convolution, antipode
# ---------------------------------------------------------------------------

class LinearEndomorphism:
    """A linear map A -> A given by a rule on basis keys, memoized.

    The memo is a plain dict: the rule is pure, so concurrent evaluation can
    at worst recompute an identical value (recomputation-tolerant).
    """

    def __init__(self, algebra: AlgebraInstance, rule, name="f"):
        self.algebra = algebra
        self.name = name
        self._rule = rule
        self._memo = {}

    def on_key(self, key) -> Element:
        e = self._memo.get(key)
        if e is None:
            e = self._rule(key)
            self._memo[key] = e
        return e

    def __call__(self, v: Element) -> Element:
        self.algebra._own(v)
        out = {}
        for key, c in v.terms.items():
            for k2, d in self.on_key(key).terms.items():
                w = c * d
                s = out.get(k2)
                s = w if s is None else s + w
                if s.is_zero():
                    out.pop(k2, None)
                else:
                    out[k2] = s
        return Element._make(v.kind, out)


def identity_endo(A: AlgebraInstance) -> LinearEndomorphism:
    return LinearEndomorphism(A, lambda key: A.element(key), "id")


def zero_endo(A: AlgebraInstance) -> LinearEndomorphism:
    return LinearEndomorphism(A, lambda key: Element.zero(A.kind), "0")


def convolution(A, f: LinearEndomorphism, g: LinearEndomorphism) -> LinearEndomorphism:
    """f * g = m (f (x) g) Delta, i.e. (f*g)(a) = sum f(a_(1)) g(a_(2))."""

    def rule(key):
        out = Element.zero(A.kind)
        for (k1, k2), c in A.basis_coproduct(key).terms.items():
            out = out + (f.on_key(k1) * g.on_key(k2)).scale(c)
        return out

    return LinearEndomorphism(A, rule, f"({f.name} * {g.name})")


def circular_convolution(A, f, g) -> LinearEndomorphism:
    """f (*) g = f * g + f + g; the zero map is its two-sided unit."""
    conv = convolution(A, f, g)

    def rule(key):
        return conv.on_key(key) + f.on_key(key) + g.on_key(key)

    return LinearEndomorphism(A, rule, f"({f.name} (*) {g.name})")


def d_map(A: AlgebraInstance, a: Element) -> Element:
    """D(a) = m Delta(a) = sum a_(1) a_(2)."""
    A._own(a)
    key_mul = A.kind.key_mul
    out = {}
    for key, c in a.terms.items():
        for (k1, k2), d in A.basis_coproduct(key).terms.items():
            k = key_mul(k1, k2)
            if k is None:
                continue
            w = c * d
            s = out.get(k)
            s = w if s is None else s + w
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return Element._make(A.kind, out)


def convolution_power_vanishes(A: AlgebraInstance, f, a: Element, n: int) -> bool:
    """Whether f^{*(n)}(a) = sum f(a_(1)) ... f(a_(n+1)) vanishes.

    This is the convolution-power notion of local nilpotency, computed from
    the (n+1)-leg Sweedler expansion; it is kept as an independent cross-check
    of the cheaper D-power criterion used to truncate the antipode series.
    """
    t = A.iterated_coproduct(a, n)
    out = Element.zero(A.kind)
    for keys, c in t.terms.items():
        prod = f.on_key(keys[0])
        for key in keys[1:]:
            if prod.is_zero():
                break
            prod = prod * f.on_key(key)
        out = out + prod.scale(c)
    return out.is_zero()


def nilpotency_index(A: AlgebraInstance, a: Element, cap: int = 64) -> int:
    """Least k <= cap with D^k(a) = 0; raises NotNilpotentWithinCap otherwise."""
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    cur = a
    for k in range(1, cap + 1):
        cur = d_map(A, cur)
        if cur.is_zero():
            return k
    raise NotNilpotentWithinCap(cap)


def antipode(A: AlgebraInstance, a: Element, cap: int = 64) -> Element:
    """The antipode series S(a) = -sum_{t>=0} (1/t!) (-D)^t (a).

    Defined for weight-zero instances only; the series is truncated at the
    nilpotency index of a, where it is exact.
    """
    if not A.weight.is_zero():
        raise WeightNotZero(f"antipode needs weight 0, instance has weight {A.weight}")
    A._own(a)
    index = nilpotency_index(A, a, cap)
    acc = -a
    cur = a
    factorial = 1
    for t in range(1, index):
        cur = d_map(A, cur)
        factorial *= t
        # -(1/t!)(-1)^t = (-1)^(t+1)/t!
        coeff = Fraction(1 if t % 2 else -1, factorial)
        acc = acc + cur.scale(LambdaPoly.const(coeff))
    return acc


def antipode_endo(A: AlgebraInstance, cap: int = 64) -> LinearEndomorphism:
    return LinearEndomorphism(A, lambda key: antipode(A, A.element(key), cap), "S")


def check_antipode_axiom(A: AlgebraInstance, a: Element, cap: int = 64) -> LawReport:
    """sum S(a_(1)) a_(2) + S(a) + a == 0 == sum a_(1) S(a_(2)) + a + S(a)."""
    s = antipode_endo(A, cap)
    sa = s(a)
    left = sa + a
    right = sa + a
    for (k1, k2), c in A.coproduct(a).terms.items():
        left = left + (s.on_key(k1) * A.element(k2)).scale(c)
        right = right + (A.element(k1) * s.on_key(k2)).scale(c)
    for side, value in (("left", left), ("right", right)):
        if not value.is_zero():
            return LawReport.fail(f"antipode-axiom-{side}", (str(a),), value)
    return LawReport.ok("antipode-axiom")


def check_antipode_properties(A: AlgebraInstance, x: Element, y: Element, cap: int = 64) -> LawReport:
    """S(xy) = -S(x)S(y), and Delta(S(x)) = -(S (x) S) Delta(x)."""
    s = antipode_endo(A, cap)
    diff = s(x * y) + s(x) * s(y)
    if not diff.is_zero():
        return LawReport.fail("antipode-multiplicativity", (str(x), str(y)), diff)
    both = A.coproduct(s(x))
    for (k1, k2), c in A.coproduct(x).terms.items():
        both = both + tensor(s.on_key(k1), s.on_key(k2)).scale(c)
    if not both.is_zero():
        return LawReport.fail("antipode-comultiplicativity", (str(x),), both)
    return LawReport.ok("antipode-properties")


# ---------------------------------------------------------------------------
# coproducts derived from a tensor element
# ---------------------------------------------------------------------------

def coproduct_from_r(A: AlgebraInstance, r: TensorElement, weight, selector=None) -> AlgebraInstance:
    """The derived coproduct Delta_r(a) = a.r - r.a - weight * (a (x) 1).

    Shares A's product and unit.  Delta_r always satisfies the weighted
    derivation law; coassociativity is NOT guaranteed and must be checked
    per instance.
    """
    if not isinstance(r, TensorElement) or r.legs != 2:
        raise KindMismatch("r must be a 2-leg tensor element")
    if r.kind != A.kind:
        raise KindMismatch(
            f"r has kind {r.kind.selector()}, algebra is {A.kind.selector()}"
        )
    weight = LambdaPoly.coerce(weight)
    unit = A.unit

    def rule(key):
        e = Element.from_key(A.kind, key)
        t = act_left(e, r) - act_right(r, e)
        if not weight.is_zero():
            t = t - tensor(e, unit).scale(weight)
        return t

    return AlgebraInstance(
        A.kind,
        weight,
        rule,
        selector=selector or f"{A.kind.selector()}:r-coproduct",
    )
