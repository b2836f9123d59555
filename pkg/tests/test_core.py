"""Generic instance machinery: coproducts, law checkers, convolution, antipode."""

import random

import pytest

from epsbialg import (
    Element,
    EMatrix,
    KindMismatch,
    LAMBDA,
    NotNilpotentWithinCap,
    UnivarMonomial,
    WeightNotZero,
    Word,
    antipode,
    antipode_endo,
    check_antipode_axiom,
    check_antipode_properties,
    check_coassoc,
    check_cocycle,
    circular_convolution,
    convolution,
    convolution_power_vanishes,
    coproduct_from_r,
    d_map,
    deconcat_algebra,
    identity_endo,
    l_coproduct_instance,
    matrix_algebra,
    nilpotency_index,
    parse_expression,
    random_integer_matrix,
    tensor,
    univar_algebra,
    word_algebra,
    zero_endo,
)
from epsbialg.core import LinearEndomorphism

M2 = matrix_algebra(2)
M3 = matrix_algebra(3)
W = word_algebra("xy")
W0 = word_algebra("xy", 0)
U = univar_algebra()


def m_el(A, text):
    return parse_expression(text, A)


# -- multiplication ----------------------------------------------------------

def test_multiply_delta_rule():
    assert M3.multiply(m_el(M3, "E[1,2]"), m_el(M3, "E[2,3]")) == m_el(M3, "E[1,3]")
    assert M3.multiply(m_el(M3, "E[1,2]"), m_el(M3, "E[1,2]")).is_zero()


def test_multiply_concatenates_words():
    assert W.multiply(m_el(W, "x*y"), m_el(W, "y*x*y")) == m_el(W, "x*y*y*x*y")


def test_multiply_rejects_foreign_elements():
    with pytest.raises(KindMismatch):
        M2.multiply(m_el(M2, "E[1,1]"), m_el(M3, "E[1,1]"))


# -- coproducts ---------------------------------------------------------------

def test_word_coproduct_of_unit():
    assert W.coproduct(W.unit) == tensor(W.unit, W.unit).scale(-LAMBDA)


def test_matrix_coproduct_of_sum():
    got = M2.coproduct(m_el(M2, "E[1,1] + E[2,1]"))
    e21 = m_el(M2, "E[2,1]")
    assert got == tensor(e21, e21).scale(-1)


def test_coproduct_of_zero():
    assert M2.coproduct(Element.zero(M2.kind)).is_zero()


def test_iterated_coproduct_m3():
    got = M3.iterated_coproduct(m_el(M3, "E[1,3]"), 2)
    want = tensor(tensor(m_el(M3, "E[1,1]"), m_el(M3, "E[2,2]")), m_el(M3, "E[3,3]"))
    assert got == want


def test_iterated_coproduct_word_weight_zero():
    xy = m_el(W0, "x*y")
    x, y = m_el(W0, "x"), m_el(W0, "y")
    got = W0.iterated_coproduct(xy, 2)
    want = (
        tensor(tensor(x, x), xy)
        + tensor(tensor(x, xy), y)
        + tensor(tensor(xy, y), y)
    )
    assert got == want


def test_iterated_coproduct_word_generic():
    # expanding the left leg of Delta(xy) at generic weight: five terms
    xy = m_el(W, "x*y")
    x, y = m_el(W, "x"), m_el(W, "y")
    got = W.iterated_coproduct(xy, 2)
    want = (
        tensor(tensor(xy, y), y)
        + tensor(tensor(x, xy), y)
        + tensor(tensor(x, y), y).scale(LAMBDA)
        + tensor(tensor(x, x), xy)
        + tensor(tensor(x, x), y).scale(LAMBDA)
    )
    assert got == want


def test_iterated_coproduct_vanishes_on_diagonal():
    assert M2.iterated_coproduct(m_el(M2, "E[1,1]"), 2).is_zero()


def test_iterated_coproduct_rejects_zero_steps():
    with pytest.raises(ValueError):
        M2.iterated_coproduct(M2.unit, 0)


# -- the weighted derivation law and coassociativity -------------------------

def test_cocycle_worked_pair():
    report = check_cocycle(M2, EMatrix(2, 1, 2), EMatrix(1, 2, 2))
    assert report.passed


def test_cocycle_unit_pair_in_words():
    report = check_cocycle(W, Word(()), Word(()))
    assert report.passed


def test_cocycle_word_pair():
    assert check_cocycle(W, Word((0, 1)), Word((1, 0, 1))).passed


def test_coassoc_examples():
    assert check_coassoc(M2, EMatrix(2, 1, 2)).passed
    assert check_coassoc(M2, EMatrix(1, 1, 2)).passed
    assert check_coassoc(W, Word((0, 1))).passed


@pytest.mark.parametrize(
    "algebra,bound",
    [
        (matrix_algebra(2), None),
        (matrix_algebra(3), None),
        (word_algebra("xy"), 4),
        (deconcat_algebra("xy"), 4),
        (univar_algebra(), 8),
        (l_coproduct_instance(2, parse_expression("E[1,2]", matrix_algebra(2))), None),
    ],
    ids=["matrix2", "matrix3", "word", "deconcat", "univar", "lmatrix"],
)
def test_shipped_instances_satisfy_both_laws(algebra, bound):
    keys = list(algebra.basis_keys(bound) if bound else algebra.basis_keys())
    for key in keys:
        assert check_coassoc(algebra, key).passed, key
    if bound:
        pairs = [
            (p, q)
            for p in keys
            for q in keys
            if len(getattr(p, "letters", ())) + len(getattr(q, "letters", ()))
            + getattr(p, "exponent", 0) + getattr(q, "exponent", 0) <= bound
        ]
    else:
        pairs = [(p, q) for p in keys for q in keys]
    for p, q in pairs:
        assert check_cocycle(algebra, p, q).passed, (p, q)


def test_failing_law_returns_witness():
    bad = coproduct_from_r(M2, tensor(m_el(M2, "E[1,1]"), m_el(M2, "E[1,1]")), 0)
    report = check_coassoc(bad, EMatrix(1, 2, 2))
    assert not report.passed
    assert report.witness is not None
    assert not report.witness.difference.is_zero()


# -- convolution --------------------------------------------------------------

def test_convolution_id_star_id():
    f = convolution(M2, identity_endo(M2), identity_endo(M2))
    assert f(m_el(M2, "E[1,2]")).is_zero()
    assert f(m_el(M2, "E[1,1]")).is_zero()


def test_convolution_linear_in_first_argument():
    neg_id = LinearEndomorphism(M2, lambda k: -M2.element(k), "-id")
    f = convolution(M2, neg_id, identity_endo(M2))
    g = convolution(M2, identity_endo(M2), identity_endo(M2))
    for key in M2.basis_keys():
        assert f.on_key(key) == -g.on_key(key)


def test_circular_convolution_zero_unit():
    f = identity_endo(M3)
    left = circular_convolution(M3, f, zero_endo(M3))
    right = circular_convolution(M3, zero_endo(M3), f)
    for key in M3.basis_keys():
        assert left.on_key(key) == f.on_key(key) == right.on_key(key)


def test_circular_convolution_neg_id():
    f = LinearEndomorphism(M2, lambda k: -M2.element(k), "-id")
    g = circular_convolution(M2, f, identity_endo(M2))
    assert g(m_el(M2, "E[1,2]")).is_zero()


def test_circular_convolution_zero_zero():
    z = circular_convolution(M2, zero_endo(M2), zero_endo(M2))
    for key in M2.basis_keys():
        assert z.on_key(key).is_zero()


def test_circular_unit_on_twenty_random_endomorphisms():
    rng = random.Random(7)
    keys = list(M3.basis_keys())
    for _ in range(20):
        table = {k: random_integer_matrix(3, rng, -2, 2) for k in keys}
        f = LinearEndomorphism(M3, table.__getitem__, "rand")
        left = circular_convolution(M3, f, zero_endo(M3))
        right = circular_convolution(M3, zero_endo(M3), f)
        for key in keys:
            assert left.on_key(key) == f.on_key(key) == right.on_key(key)


def test_endomorphism_memo_is_stable():
    calls = []

    def rule(key):
        calls.append(key)
        return M2.element(key)

    f = LinearEndomorphism(M2, rule)
    k = EMatrix(1, 2, 2)
    assert f.on_key(k) == f.on_key(k)
    assert calls == [k]


# -- D = m Delta, nilpotency, antipode ---------------------------------------

def test_d_vanishes_on_elementary_matrices():
    for n in range(2, 7):
        A = matrix_algebra(n)
        for key in A.basis_keys():
            assert d_map(A, A.element(key)).is_zero()


def test_d_on_word_unit():
    assert d_map(W, W.unit) == W.unit.scale(-LAMBDA)


def test_d_on_word_weight_zero():
    assert d_map(W0, m_el(W0, "x*y")) == m_el(W0, "x*x*y + x*y*y")


def test_nilpotency_index_matrix():
    for key in M3.basis_keys():
        assert nilpotency_index(M3, M3.element(key)) == 1


def test_nilpotency_index_zero_element():
    assert nilpotency_index(M2, Element.zero(M2.kind)) == 1


def test_nilpotency_cap_exceeded_on_words():
    with pytest.raises(NotNilpotentWithinCap) as exc:
        nilpotency_index(W0, m_el(W0, "x*y"), cap=8)
    assert exc.value.cap == 8


def test_antipode_is_negation_on_matrices():
    assert antipode(M2, m_el(M2, "E[1,2]")) == m_el(M2, "-E[1,2]")
    assert antipode(M2, M2.unit) == -M2.unit
    assert antipode(M2, Element.zero(M2.kind)).is_zero()


def test_antipode_requires_weight_zero():
    with pytest.raises(WeightNotZero):
        antipode(W, m_el(W, "x"))


def test_antipode_axiom_examples():
    assert check_antipode_axiom(M2, m_el(M2, "E[1,2]")).passed
    assert check_antipode_axiom(M2, M2.unit).passed
    rng = random.Random(3)
    for _ in range(5):
        assert check_antipode_axiom(M3, random_integer_matrix(3, rng)).passed


def test_antipode_properties_examples():
    assert check_antipode_properties(M3, m_el(M3, "E[1,2]"), m_el(M3, "E[2,3]")).passed
    assert check_antipode_properties(M3, M3.unit, M3.unit).passed
    assert check_antipode_properties(M3, Element.zero(M3.kind), m_el(M3, "E[1,1]")).passed


def test_antipode_involution():
    s = antipode_endo(M3)
    for key in M3.basis_keys():
        e = M3.element(key)
        assert antipode(M3, s(e)) == e


def test_convolution_power_conformance():
    # the convolution-power route agrees with the D-power truncation argument
    idm = identity_endo(M3)
    for key in M3.basis_keys():
        e = M3.element(key)
        for n in (1, 2, 3):
            assert convolution_power_vanishes(M3, idm, e, n)
    dmap = LinearEndomorphism(M3, lambda k: d_map(M3, M3.element(k)), "D")
    assert convolution_power_vanishes(M3, dmap, m_el(M3, "E[1,3]"), 1)


# -- derived coproducts -------------------------------------------------------

def test_derived_coproduct_matches_l_form():
    r = tensor(m_el(M2, "E[1,2]"), m_el(M2, "E[1,2]"))
    inst = coproduct_from_r(M2, r, 0)
    L = m_el(M2, "E[1,2]")
    for key in inst.basis_keys():
        m = inst.element(key)
        assert inst.coproduct(m) == tensor(m * L, L) - tensor(L, L * m)


def test_derived_coproduct_unit_case():
    r = tensor(m_el(M2, "E[1,2]"), m_el(M2, "E[1,2]"))
    inst = coproduct_from_r(M2, r, LAMBDA)
    assert inst.coproduct(inst.unit) == tensor(inst.unit, inst.unit).scale(-LAMBDA)


def test_derived_coproduct_on_e21():
    r = tensor(m_el(M2, "E[1,2]"), m_el(M2, "E[1,2]"))
    inst = coproduct_from_r(M2, r, 0)
    got = inst.coproduct(m_el(M2, "E[2,1]"))
    want = tensor(m_el(M2, "E[2,2]"), m_el(M2, "E[1,2]")) - tensor(
        m_el(M2, "E[1,2]"), m_el(M2, "E[1,1]")
    )
    assert got == want


def test_derived_coproduct_always_a_weighted_derivation():
    rng = random.Random(11)
    for _ in range(5):
        r = tensor(random_integer_matrix(2, rng, -2, 2), random_integer_matrix(2, rng, -2, 2))
        inst = coproduct_from_r(M2, r, LAMBDA)
        for p in inst.basis_keys():
            for q in inst.basis_keys():
                assert check_cocycle(inst, p, q).passed


def test_derived_coproduct_coassociativity_depends_on_l_square():
    good = coproduct_from_r(M2, tensor(m_el(M2, "E[1,2]"), m_el(M2, "E[1,2]")), 0)
    bad = coproduct_from_r(M2, tensor(m_el(M2, "E[1,1]"), m_el(M2, "E[1,1]")), 0)
    assert all(check_coassoc(good, k).passed for k in good.basis_keys())
    results = [check_coassoc(bad, k).passed for k in bad.basis_keys()]
    assert not all(results)
    for p in bad.basis_keys():
        for q in bad.basis_keys():
            assert check_cocycle(bad, p, q).passed


def test_derived_coproduct_rejects_foreign_r():
    r = tensor(m_el(M3, "E[1,1]"), m_el(M3, "E[1,1]"))
    with pytest.raises(KindMismatch):
        coproduct_from_r(M2, r, 0)
