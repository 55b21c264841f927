from fractions import Fraction

import pytest

from jordkit.algebra import (
    GradedSubspace,
    SuperAlgebra,
    associator,
    check_grading,
    direct_sum,
    is_unit,
    make_grassmann,
    make_unit_algebra,
    monomial_sign,
    multiply,
    parity_parts,
)
from jordkit.errors import AlgebraMismatchError, DimensionMismatchError, TableError


# Fixture for a two-dimensional algebra with an even unit and odd square zero
@pytest.fixture
def dual():
    return SuperAlgebra.from_products("dual", 1, 1, ("1", "u"), {
        (0, 0): {0: 1},
        (0, 1): {1: 1},
        (1, 0): {1: 1},
    })


# Test table validation
def test_table_errors():
    with pytest.raises(TableError):
        SuperAlgebra("bad", 1, 0, ("e", "f"), [])
    with pytest.raises(TableError):
        SuperAlgebra("bad", 2, 0, ("e", "e"), [], implicit_zero_rows=True)
    with pytest.raises(TableError):
        SuperAlgebra("bad", 1, 0, ("e",), [(0, 0, 1, 1)])
    with pytest.raises(TableError):
        SuperAlgebra("bad", 1, 0, ("e",), [(0, 0, 0, 1), (0, 0, 0, 2)])
    with pytest.raises(TableError):
        SuperAlgebra("bad", 2, 0, ("e", "f"), [(0, 0, 0, 1)])


def test_explicit_zero_rows_are_accepted():
    entries = [(0, 0, 0, 1), (0, 1, 1, 0), (1, 0, 1, 0), (1, 1, 1, 1)]
    a = SuperAlgebra("split", 2, 0, ("e", "f"), entries)
    assert a.entries() == [(0, 0, 0, 1), (1, 1, 1, 1)]


def test_shape(k10):
    assert k10.dim == 10
    assert list(k10.odd_indices) == [6, 7, 8, 9]
    assert k10.parity(5) == 0 and k10.parity(6) == 1
    assert k10.index("c2") == 4
    with pytest.raises(KeyError):
        k10.index("z")


# Test element arithmetic
def test_element_products(k10):
    e, a, p1, p2 = k10["e"], k10["a"], k10["p1"], k10["p2"]
    assert a * a == 4 * e
    assert e * p1 == p1 / 2
    assert p1 * p2 == a + 2 * e - 6 * k10["f"]
    assert multiply(p2, p1) == -(p1 * p2)
    assert (a - a).is_zero()


def test_parse_element(k10, tensor):
    assert k10.parse_element("2*e - a") == 2 * k10["e"] - k10["a"]
    assert k10.parse_element("-1/2 p1 + q2") == k10["q2"] - k10["p1"] / 2
    assert k10.parse_element("p2+q2") == k10["p2"] + k10["q2"]
    assert tensor.parse_element("3/2*1 - 2*ee").coords[:2] == (Fraction(3, 2), -2)
    for text in ("", "e a", "2*z", "e +"):
        with pytest.raises((ValueError, KeyError)):
            k10.parse_element(text)


def test_element_str(k10):
    assert str(k10.parse_element("2*e - a + 1/2*p1")) == "2*e - a + 1/2*p1"
    assert str(k10.zero()) == "0"


def test_parity(k10):
    x = k10["e"] + k10["p1"]
    assert x.parity is None
    assert k10["p1"].parity == 1
    assert k10.zero().parity == 0
    even, odd = parity_parts(x)
    assert even == k10["e"] and odd == k10["p1"]


def test_mismatched_algebras(k10, k3):
    with pytest.raises(AlgebraMismatchError):
        k10["e"] + k3["e"]
    with pytest.raises(DimensionMismatchError):
        k10.element([1, 2])


def test_associator(dual):
    one, u = dual["1"], dual["u"]
    assert associator(u, one, u).is_zero()


# Test grading and units
def test_check_grading(k10, dual):
    assert check_grading(k10).passed
    broken = SuperAlgebra.from_products("ungraded", 1, 1, ("1", "u"), {
        (0, 0): {1: 1},
    })
    report = check_grading(broken)
    assert not report.passed
    assert report.witnesses[0].indices == (0, 0, 1)


def test_is_unit(k10, tensor):
    assert is_unit(k10, k10["e"] + k10["f"])
    assert not is_unit(k10, k10["e"])
    assert is_unit(tensor, tensor["1"])


def test_direct_sum(dual):
    f = make_unit_algebra("f", name="F")
    s = direct_sum(dual, f)
    assert (s.dim_even, s.dim_odd) == (2, 1)
    assert s.labels == ("dual.1", "F.f", "dual.u")
    assert s["dual.1"] * s["F.f"] == s.zero()
    assert is_unit(s, s["dual.1"] + s["F.f"])


# Test graded subspaces
def test_graded_subspace(k10):
    s = GradedSubspace.from_labels(k10, ["e", "f", "a", "p1", "p2"])
    assert s.dims == (3, 2)
    assert s.is_subalgebra()
    assert s.contains(k10["e"] - k10["a"])
    assert not s.contains(k10["q1"])
    mixed = GradedSubspace.from_elements(k10, [k10["e"] + k10["p1"]])
    assert mixed.dims == (1, 1)
    assert len(s.complement_basis()) == 5
    assert s.restrict().dim == 5


# Test the Grassmann algebra
@pytest.mark.parametrize("n, dims", [(0, (1, 0)), (1, (1, 1)), (3, (4, 4))])
def test_grassmann_dims(n, dims):
    g = make_grassmann(n)
    assert (g.dim_even, g.dim_odd) == dims


def test_grassmann_products():
    g = make_grassmann(3)
    assert g.labels == ("1", "g12", "g13", "g23", "g1", "g2", "g3", "g123")
    assert g["g1"] * g["g2"] == g["g12"]
    assert g["g2"] * g["g1"] == -g["g12"]
    assert (g["g1"] * g["g1"]).is_zero()
    assert g["g13"] * g["g2"] == -g["g123"]
    with pytest.raises(ValueError):
        make_grassmann(9)


def test_monomial_sign():
    from bitarray import frozenbitarray

    s = frozenbitarray("010", endian="little")
    t = frozenbitarray("100", endian="little")
    assert monomial_sign(s, t) == -1
    assert monomial_sign(t, s) == 1
