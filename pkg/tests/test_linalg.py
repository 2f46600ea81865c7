import itertools

import pytest
from hypothesis import given, strategies as st

from hyperent.linalg import (
    Matrix,
    bipartite_class,
    determinant,
    inverse,
    local_ranks,
    minor,
    rank,
    row_space_basis,
    solve,
)
from hyperent.scalars import GaussianRational as G, ZERO
from hyperent.tensor import Tensor, ket

from conftest import gaussian_ints


def leibniz(rows):
    n = len(rows)
    total = ZERO
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = G(-1 if inversions % 2 else 1)
        for i, p in enumerate(perm):
            term = term * rows[i][p]
        total = total + term
    return total


def square(n):
    return st.lists(st.lists(gaussian_ints, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 4).flatmap(square))
def test_determinant_matches_leibniz(rows):
    assert determinant(Matrix(rows)) == leibniz(rows)


@given(square(3), square(3))
def test_determinant_multiplicative(a, b):
    ma, mb = Matrix(a), Matrix(b)
    assert determinant(ma @ mb) == determinant(ma) * determinant(mb)


@given(square(3))
def test_rank_consistent_with_determinant(rows):
    m = Matrix(rows)
    assert (rank(m) == 3) == (not determinant(m).is_zero())
    assert rank(m) == rank(m.T)


def test_rank_examples():
    assert rank(Matrix([[1, 2], [2, 4]])) == 1
    assert rank(Matrix.zeros(3, 4)) == 0
    assert rank(Matrix([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]])) == 2
    assert rank(Matrix([[G(1, 1), G(2)], [G(2), G(2, -2)]])) == 1


def test_minor():
    m = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    with pytest.raises(ValueError):
        minor(m, drop_cols=[0])
    assert minor(Matrix([[1, 2, 3, 4], [0, 1, 0, 1], [2, 0, 1, 1]]), drop_cols=[3]) == leibniz(
        [[G(1), G(2), G(3)], [G(0), G(1), G(0)], [G(2), G(0), G(1)]]
    )
    assert minor(m, drop_rows=[2], drop_cols=[2]) == G(-3)


@given(square(3), st.lists(gaussian_ints, min_size=3, max_size=3))
def test_solve_and_inverse(rows, rhs):
    m = Matrix(rows)
    if determinant(m).is_zero():
        with pytest.raises(ZeroDivisionError):
            inverse(m)
        return
    x = solve(m, rhs)
    assert list(m.apply(x)) == list(rhs)
    assert m @ inverse(m) == Matrix.identity(3)


def test_row_space_basis():
    m = Matrix([[1, 2, 0], [2, 4, 0], [0, 0, 1]])
    basis = row_space_basis(m)
    assert len(basis) == 2
    assert rank(Matrix(list(basis) + m.tolist())) == 2


def test_local_ranks():
    assert local_ranks(ket("000", "111")) == (2, 2, 2)
    assert local_ranks(ket("001", "010")) == (1, 2, 2)
    assert local_ranks(ket("000", "111", dims=(3, 2, 2))) == (2, 2, 2)
    assert local_ranks(ket("000", "101", "211", dims=(3, 2, 2))) == (3, 2, 2)


def test_bipartite_class():
    assert bipartite_class(Tensor((2, 2), [1, 0, 0, 1])) == 2
    assert bipartite_class(Tensor((2, 3), [1, 2, 3, 2, 4, 6])) == 1
    assert bipartite_class(Tensor.from_dict((3, 3), {(0, 0): 1, (1, 1): 1, (2, 2): 1})) == 3
