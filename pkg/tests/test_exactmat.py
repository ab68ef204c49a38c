from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import low_rank_matrices, matrices
from enhadhm.exactmat import (MalformedRational, MissingField, RatMatrix, ShapeMismatch, Subspace,
                              format_rational, intersect_spaces, left_action, parse_rational, preimage,
                              right_action, solve_affine, sum_spaces)

sympy = pytest.importorskip("sympy")


def to_sympy(M: RatMatrix):
    return sympy.Matrix(M.rows, M.cols, [sympy.Rational(x.numerator, x.denominator) for x in M.entries])


# -- parsing -----------------------------------------------------------------

@pytest.mark.parametrize("text,value", [("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), (" 7/3 ", Fraction(7, 3)),
                                        (5, Fraction(5))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "abc", "", "1.5", 1.5, True, None, "1/2/3"])
def test_parse_rational_rejects(bad):
    with pytest.raises(MalformedRational, match="malformed rational"):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


# -- concrete values -----------------------------------------------------------

def test_rank_and_kernel_small():
    M = RatMatrix(2, 3, [[1, 2, 3], [2, 4, 6]])
    assert M.rank() == 1
    K = M.kernel()
    assert K.dim == 2
    assert (M @ K.basis).is_zero()


def test_inverse():
    M = RatMatrix(2, 2, [[2, 1], [1, 1]])
    assert M.inverse() == RatMatrix(2, 2, [[1, -1], [-1, 2]])
    with pytest.raises(ZeroDivisionError):
        RatMatrix(2, 2, [[1, 2], [2, 4]]).inverse()


def test_rref_fractions():
    R, piv = RatMatrix(2, 2, [[2, 3], [4, 5]]).rref()
    assert R == RatMatrix.identity(2) and piv == [0, 1]


def test_empty_shapes():
    Z = RatMatrix.zeros(0, 3)
    assert Z.rank() == 0 and Z.kernel().dim == 3
    assert (RatMatrix.zeros(2, 0) @ RatMatrix.zeros(0, 4)) == RatMatrix.zeros(2, 4)


def test_json_errors():
    with pytest.raises(MissingField):
        RatMatrix.from_dict({"rows": 1, "cols": 1})
    with pytest.raises(ShapeMismatch):
        RatMatrix.from_dict({"rows": 2, "cols": 1, "entries": [["1"]]})
    with pytest.raises(MalformedRational):
        RatMatrix.from_dict({"rows": 1, "cols": 1, "entries": [["x"]]})


def test_solve_affine_inconsistent():
    M = RatMatrix(2, 1, [[1], [1]])
    assert solve_affine(M, [1, 2]) is None
    x0, K = solve_affine(M, [3, 3])
    assert x0 == (Fraction(3),) and K.dim == 0


def test_coordinate_subspace():
    U = Subspace.coordinate(4, [1, 3])
    assert U.dim == 2 and U.contains([0, 5, 0, -1]) and not U.contains([1, 0, 0, 0])


# -- properties ----------------------------------------------------------------

@given(low_rank_matrices())
def test_rank_matches_sympy(M):
    assert M.rank() == to_sympy(M).rank()


@given(matrices())
def test_rank_nullity(M):
    K = M.kernel()
    assert M.rank() + K.dim == M.cols
    assert (M @ K.basis).is_zero()


@given(low_rank_matrices())
def test_rank_of_transpose(M):
    assert M.rank() == M.T.rank()


@given(matrices(rows=3, cols=3))
def test_inverse_roundtrip(M):
    if M.is_invertible():
        assert M @ M.inverse() == RatMatrix.identity(3)
    else:
        assert M.rank() < 3


@given(low_rank_matrices(), st.data())
def test_solve_affine(M, data):
    x = data.draw(matrices(rows=M.cols, cols=1))
    b = M.apply(x.col(0))
    x0, K = solve_affine(M, b)
    assert M.apply(x0) == b
    assert K == M.kernel()


@given(st.data())
def test_vectorization_actions(data):
    m, n = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 3))
    X = data.draw(matrices(rows=m, cols=n))
    L = data.draw(matrices(rows=m, cols=m))
    R = data.draw(matrices(rows=n, cols=n))
    assert left_action(L, n).apply(X.vec()) == (L @ X).vec()
    assert right_action(R, m).apply(X.vec()) == (X @ R).vec()
    assert RatMatrix.unvec(X.vec(), m, n) == X


@given(low_rank_matrices(), low_rank_matrices())
def test_modular_law_dimensions(M, N):
    if M.rows != N.rows:
        N = RatMatrix.zeros(M.rows, 1)
    U, W = Subspace.span(M), Subspace.span(N)
    S, I = sum_spaces(U, W), intersect_spaces(U, W)
    assert S.dim + I.dim == U.dim + W.dim
    assert I <= U and I <= W and U <= S and W <= S


@given(low_rank_matrices(), st.data())
def test_preimage(M, data):
    U = Subspace.span(data.draw(matrices(rows=M.rows, cols=data.draw(st.integers(0, 3)))))
    P = preimage(M, U)
    assert P.image(M) <= U
    assert M.kernel() <= P


@given(matrices())
def test_json_roundtrip(M):
    assert RatMatrix.from_json(M.to_json()) == M


@given(low_rank_matrices())
def test_canonical_subspace_is_basis_independent(M):
    U = Subspace.span(M)
    assert Subspace.span(U.basis @ RatMatrix.identity(U.dim)) == U
    assert Subspace.span(M.hstack(M)) == U
