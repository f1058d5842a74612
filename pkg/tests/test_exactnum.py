from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigradedsyz.errors import DimensionMismatch, NonSquare
from bigradedsyz.exactnum import (
    BACKENDS, ExactMatrix, det, is_independent, kernel_basis, nullity, rank, rational, rref, solve,
)

scalars = st.one_of(
    st.integers(-6, 6),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
)


@st.composite
def matrices(draw, max_rows=5, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(scalars, min_size=c, max_size=c), min_size=r, max_size=r))
    return ExactMatrix.from_rows(rows)


def test_rational_normalizes_integral_fractions():
    assert rational(Fraction(6, 3)) == 2 and type(rational(Fraction(6, 3))) is int
    assert rational(Fraction(1, 3)) == Fraction(1, 3)


def test_rank_and_kernel_small():
    M = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    assert rank(M) == 1 and nullity(M) == 2
    ker = kernel_basis(M)
    assert ker == [[1, Fraction(-1, 2), 0], [1, 0, Fraction(-1, 3)]]
    for v in ker:
        assert M.mul_vec(v) == [0, 0]


def test_det_values():
    assert det(ExactMatrix.from_rows([[2, 1], [1, 1]])) == 1
    assert det(ExactMatrix.from_rows([[Fraction(1, 2), 0], [0, 4]])) == 2
    assert det(ExactMatrix.from_rows([[0, 1], [1, 0]])) == -1
    with pytest.raises(NonSquare):
        det(ExactMatrix.from_rows([[1, 2, 3]]))


def test_solve_consistent_and_inconsistent():
    M = ExactMatrix.from_rows([[1, 1], [1, -1]])
    assert solve(M, [2, 0]) == [1, 1]
    assert solve(ExactMatrix.from_rows([[1, 1], [2, 2]]), [1, 3]) is None
    with pytest.raises(DimensionMismatch):
        solve(M, [1])


def test_is_independent():
    assert is_independent([[1, 0], [0, 1]])
    assert not is_independent([[1, 2], [2, 4]])


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatch):
        ExactMatrix.from_rows([[1, 2], [3]])


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_backends_agree(M):
    if len(BACKENDS) < 2:
        pytest.skip("only one backend available")
    assert rank(M, "python") == rank(M, "flint")
    assert rref(M, "python") == rref(M, "flint")
    if M.rows == M.cols:
        assert det(M, "python") == det(M, "flint")


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    ker = kernel_basis(M)
    assert len(ker) == M.cols - rank(M)
    for v in ker:
        assert M.mul_vec(v) == [0] * M.rows
    if ker:
        assert is_independent(ker)


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4), st.lists(scalars, min_size=6, max_size=6))
def test_solve_roundtrip(M, x):
    x = x[:M.cols]
    b = M.mul_vec(x)
    y = solve(M, b)
    assert y is not None and M.mul_vec(y) == b


@settings(max_examples=40, deadline=None)
@given(matrices(3, 3), matrices(3, 3))
def test_det_multiplicative(A, B):
    if A.rows == A.cols == B.rows == B.cols:
        assert det(A @ B) == det(A) * det(B)
