"""Shared test helpers: independent oracles and hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from epsbialg import Element, EMatrix, LambdaPoly, MatrixKind, Word, WordKind

# -- independent dense-matrix oracle ----------------------------------------
# Classical row-by-column multiplication over Q[L]; knows nothing about the
# delta rule on elementary matrices.


def dense_from_element(e, n):
    rows = [[LambdaPoly() for _ in range(n)] for _ in range(n)]
    for key, c in e.terms.items():
        rows[key.i - 1][key.j - 1] = rows[key.i - 1][key.j - 1] + c
    return rows


def dense_mul(a, b):
    n = len(a)
    out = [[LambdaPoly() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = LambdaPoly()
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            out[i][j] = acc
    return out


def element_from_dense(rows):
    n = len(rows)
    kind = MatrixKind(n)
    terms = {}
    for i in range(n):
        for j in range(n):
            if not rows[i][j].is_zero():
                terms[EMatrix(i + 1, j + 1, n)] = rows[i][j]
    return Element(kind, terms)


# -- hypothesis strategies ----------------------------------------------------

small_fractions = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
)

lambda_polys = st.dictionaries(
    st.integers(min_value=0, max_value=3), small_fractions, max_size=3
).map(LambdaPoly)

nonzero_polys = lambda_polys.filter(lambda p: not p.is_zero())


def matrix_elements(n, max_terms=3):
    kind = MatrixKind(n)
    idx = st.integers(min_value=1, max_value=n)
    keys = st.builds(EMatrix, idx, idx, st.just(n))
    return st.dictionaries(keys, lambda_polys, max_size=max_terms).map(
        lambda terms: Element(kind, terms)
    )


def word_elements(alphabet="xy", max_len=3, max_terms=3):
    kind = WordKind(alphabet)
    letters = st.integers(min_value=0, max_value=len(kind.alphabet) - 1)
    keys = st.builds(Word, st.lists(letters, max_size=max_len).map(tuple))
    return st.dictionaries(keys, lambda_polys, max_size=max_terms).map(
        lambda terms: Element(kind, terms)
    )
