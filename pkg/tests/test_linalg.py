from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bareiss_rank
from schurmult.linalg import (
    Matrix,
    format_scalar,
    nullspace_basis,
    rank,
    rref,
    row_basis,
    sparse_rref,
    to_scalar,
)

small_ints = st.integers(-3, 3)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(small_ints) for _ in range(c)] for _ in range(r)]


def test_scalars():
    assert to_scalar("3/6") == Fraction(1, 2)
    assert to_scalar(-2) == Fraction(-2)
    assert format_scalar(Fraction(-1, 2)) == "-1/2"
    assert format_scalar(Fraction(4)) == "4"
    with pytest.raises(TypeError):
        to_scalar(0.5)


def test_identity_and_rank_one():
    assert rank(Matrix.identity(4)) == 4
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]])
    assert rank(m) == 1
    reduced, pivots = rref(m)
    assert pivots == [0]
    assert reduced.rows[0] == (1, 2, 3)
    assert nullspace_basis(m).shape == (2, 3)


def test_empty_transpose():
    m = Matrix.zeros(0, 3)
    assert m.transpose().shape == (3, 0)


def test_sparse_rref_order():
    rows = [{0: Fraction(1), 1: Fraction(1)}]
    _, pivots = sparse_rref(rows, order=[1, 0])
    assert pivots == [1]


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_rank_matches_bareiss(rows):
    m = Matrix.from_rows(rows, len(rows[0]))
    assert rank(m) == bareiss_rank(rows)


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_rank_nullity(rows):
    ncols = len(rows[0])
    m = Matrix.from_rows(rows, ncols)
    null = nullspace_basis(m)
    assert rank(m) + null.nrows == ncols
    for v in null.rows:
        assert all(x == 0 for x in m.matvec(v))


@settings(max_examples=100, deadline=None)
@given(int_matrices())
def test_rref_idempotent(rows):
    m = Matrix.from_rows(rows, len(rows[0]))
    once, p1 = rref(m)
    twice, p2 = rref(once)
    assert once == twice and p1 == p2
    assert rank(row_basis(m)) == row_basis(m).nrows == rank(m)


@settings(max_examples=100, deadline=None)
@given(int_matrices(), int_matrices())
def test_stacked_rank(a, b):
    ncols = len(a[0])
    b = [row[:ncols] + [0] * (ncols - len(row)) for row in b]
    ma, mb = Matrix.from_rows(a, ncols), Matrix.from_rows(b, ncols)
    stacked = rank(ma.vstack(mb))
    assert max(rank(ma), rank(mb)) <= stacked <= rank(ma) + rank(mb)
