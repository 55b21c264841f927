from fractions import Fraction

import pytest

from jordkit.errors import DimensionMismatchError, SingularMatrixError
from jordkit.linalg import (
    EchelonBuilder,
    Matrix,
    Subspace,
    invert,
    nullspace,
    rref,
    solve,
    solve_in_span,
)


@pytest.fixture
def m():
    return Matrix.from_rows([[2, 1], [1, 1]])


# Test construction and shape checks
def test_matrix_shape(m):
    assert m.shape == (2, 2)
    assert m[0, 1] == 1
    assert m.column(0) == (2, 1)
    with pytest.raises(DimensionMismatchError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(DimensionMismatchError):
        Matrix.from_rows([[1, 2], [3]])


def test_matrix_entries_are_exact():
    m = Matrix.from_rows([["1/2", 3], [Fraction(-2, 3), "4"]])
    assert m[0, 0] == Fraction(1, 2)
    assert m.to_strings() == [["1/2", "3"], ["-2/3", "4"]]


def test_matrix_refuses_floats():
    with pytest.raises(TypeError):
        Matrix.from_rows([[0.5]])


def test_arithmetic(m):
    identity = Matrix.identity(2)
    assert m @ identity == m
    assert m + m == 2 * m
    assert m - m == Matrix.zeros(2, 2)
    assert (-m).entries == tuple(-a for a in m.entries)
    assert m.apply([1, -1]) == (1, 0)
    assert m.transpose() == Matrix.from_rows([[2, 1], [1, 1]])


def test_kron():
    w = Matrix.from_rows([[0, 1], [-1, 0]])
    assert w.kron(w) == Matrix.from_rows(
        [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
    )


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[2, 1], [1, 1]], 1),
        ([[1, 2], [2, 4]], 0),
        ([[0, 1], [1, 0]], -1),
        ([["1/2", 0, 0], [0, 3, 0], [0, 0, 2]], 3),
    ],
)
def test_determinant(rows, expected):
    assert Matrix.from_rows(rows).determinant() == expected


def test_invert(m):
    assert invert(m) == Matrix.from_rows([[1, -1], [-1, 2]])
    assert m @ invert(m) == Matrix.identity(2)
    with pytest.raises(SingularMatrixError):
        invert(Matrix.from_rows([[1, 2], [2, 4]]))


def test_rref_and_nullspace():
    a = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    reduced, pivots = rref(a)
    assert pivots == [0, 1]
    assert reduced.row(2) == (0, 0, 0)
    basis = nullspace(a)
    assert len(basis) == 1
    assert a.apply(basis[0]) == (0, 0, 0)
    assert basis[0][2] == 1


def test_solve():
    a = Matrix.from_rows([[1, 1], [1, -1]])
    assert solve(a, [3, 1]) == (2, 1)
    assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None
    assert solve_in_span([(1, 0, 1), (0, 1, 1)], (2, 3, 5)) == (2, 3)
    assert solve_in_span([(1, 0, 1)], (0, 1, 0)) is None


# Test the canonical subspace representation
def test_subspace_equality_is_canonical():
    u = Subspace(3, [(1, 1, 0), (0, 1, 1)])
    w = Subspace(3, [(1, 0, -1), (1, 2, 1), (2, 2, 0)])
    assert u == w
    assert u.dim == 2
    assert u.contains((1, 2, 1))
    assert not u.contains((1, 0, 0))
    assert u.complement_coordinates() == [2]


def test_subspace_lattice():
    u = Subspace(3, [(1, 0, 0), (0, 1, 0)])
    w = Subspace(3, [(0, 1, 0), (0, 0, 1)])
    assert u.intersect(w) == Subspace(3, [(0, 1, 0)])
    assert u.sum(w) == Subspace.full(3)
    assert u.intersect(Subspace.zero(3)) == Subspace.zero(3)
    assert u.coordinates((2, 5, 0)) == (2, 5)
    assert u.coordinates((0, 0, 1)) is None


def test_echelon_builder():
    builder = EchelonBuilder(3)
    assert builder.insert((0, 2, 2))
    assert builder.insert((1, 1, 1))
    assert not builder.insert((1, 3, 3))
    assert builder.dim == 2
    assert builder.contains((2, 0, 0))
    assert builder.to_subspace() == Subspace(3, [(1, 0, 0), (0, 1, 1)])
    with pytest.raises(DimensionMismatchError):
        builder.insert((1, 0))
