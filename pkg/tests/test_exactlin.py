from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from whkit import exactlin as xl
from whkit.exactlin import GaussianRational as Q


def to_sympy(x):
    x = xl.scalar(x)
    if isinstance(x, Q):
        return sympy.Rational(x.re.numerator, x.re.denominator) + sympy.I * sympy.Rational(
            x.im.numerator, x.im.denominator)
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def sym_matrix(M):
    return sympy.Matrix([[to_sympy(v) for v in row] for row in M])


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
scalars = st.one_of(
    st.integers(-3, 3),
    st.integers(-3, 3),
    rationals,
    st.tuples(rationals, rationals).map(lambda t: xl.scalar(Q(*t))),
)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    vals = draw(st.lists(scalars, min_size=r * c, max_size=r * c))
    return xl.as_exact(np.array(vals, dtype=object).reshape(r, c))


# -- fixed cases --------------------------------------------------------

def test_kernel_examples():
    assert xl.kernel_basis(xl.identity(3)) == []
    assert len(xl.kernel_basis(xl.zeros(2, 2))) == 2
    (v,) = xl.kernel_basis(xl.as_exact([[1, 1], [2, 2]]))
    assert v[0] == -v[1] != 0


def test_solve_rank_image_examples():
    b = xl.as_exact([1, Fraction(1, 2), Q(0, 1)])
    assert np.all(xl.solve(xl.identity(3), b) == b)
    i = Q(0, 1)
    assert xl.rank(xl.as_exact([[1, i], [i, -1]])) == 1
    assert xl.image_basis(xl.zeros(3, 2)) == []


def test_gaussian_arithmetic():
    i = Q(0, 1)
    assert xl.scalar(i * i) == -1
    assert isinstance(xl.scalar(i * i), int)
    assert xl.div(1, i) == Q(0, -1)
    assert xl.scalar(Q(1, 2) * Q(1, -2)) == 5


@pytest.mark.parametrize("text", ["0", "-3", "5/7", "i", "-i", "2/3 i", "1+i", "1/2-3/4 i"])
def test_scalar_round_trip(text):
    x = xl.parse_scalar(text)
    assert xl.parse_scalar(xl.format_scalar(x)) == x


@pytest.mark.parametrize("text", ["", "1.5", "abc", "1 2"])
def test_bad_scalars(text):
    with pytest.raises(ValueError):
        xl.parse_scalar(text)


def test_floats_refused():
    with pytest.raises(TypeError):
        xl.scalar(0.5)


# -- properties against an independent CAS -------------------------------

@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(M):
    assert xl.rank(M) == sym_matrix(M).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_is_kernel(M):
    K = xl.kernel_basis(M)
    assert len(K) == M.shape[1] - sym_matrix(M).rank()
    for v in K:
        assert xl.is_zero(M @ v)
    assert xl.span_rank(K, M.shape[1]) == len(K)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_consistency(M, data):
    b = xl.as_exact(data.draw(st.lists(scalars, min_size=M.shape[0], max_size=M.shape[0])))
    x = xl.solve(M, b)
    S = sym_matrix(M)
    consistent = S.rank() == S.row_join(sym_matrix(b.reshape(-1, 1))).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert np.all(M @ x == b)


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_inverse(M):
    assume(M.shape[0] == M.shape[1] and xl.rank(M) == M.shape[0])
    Minv = xl.inverse(M)
    assert np.all(M @ Minv == xl.identity(M.shape[0]))


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_image_and_annihilator(M):
    m, n = M.shape
    img = xl.image_basis(M)
    assert len(img) == xl.rank(M)
    for v in img:
        assert xl.solve(M, v) is not None
    rows = [M[r] for r in range(m)]
    ann = xl.annihilator(rows, n)
    assert len(ann) == n - xl.rank(M)
    for f in ann:
        assert all(xl.scalar(f @ r) == 0 for r in rows)


@settings(max_examples=100, deadline=None)
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    s = lambda x: to_sympy(x)  # noqa: E731
    assert sympy.simplify(s(a * (b + c)) - (s(a) * s(b) + s(a) * s(c))) == 0
    assert xl.scalar(a * b) == xl.scalar(b * a)
    if b != 0:
        assert xl.scalar(xl.div(a, b) * b) == xl.scalar(a)
        assert sympy.simplify(s(xl.div(a, b)) - s(a) / s(b)) == 0


@settings(max_examples=100, deadline=None)
@given(scalars)
def test_format_parse_inverse(x):
    assert xl.parse_scalar(xl.format_scalar(x)) == xl.scalar(x)


def test_random_vectors_are_seeded():
    a = xl.random_vectors(5, 3, seed=11)
    b = xl.random_vectors(5, 3, seed=11)
    assert all(np.all(u == v) for u, v in zip(a, b))
    assert all(-3 <= x <= 3 for v in a for x in v)
