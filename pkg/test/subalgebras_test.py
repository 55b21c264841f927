from fractions import Fraction

import pytest

from jordkit.algebra import K10_V_GRAM, GradedSubspace, make_dt
from jordkit.errors import AlgebraMismatchError, ReflectionDegenerateError
from jordkit.linalg import Matrix
from jordkit.morphisms import Morphism, swap_automorphism
from jordkit.subalgebras import (
    KINDS,
    NOT_MAXIMAL,
    PROBABLY_MAXIMAL,
    DtInvariant,
    dt_parameter,
    fixed_subalgebra,
    is_ideal,
    is_solvable,
    is_subalgebra,
    maximal_subalgebra,
    maximality_probe,
    orthogonal_idempotents,
    quadratic_norm,
    quotient,
    reflection,
    require_kind,
    saturate,
    span_closure,
    v_coordinates,
    witt_map,
)

MAXIMAL_DIMS = {"i": (6, 0), "ii": (3, 2), "iii": (4, 3), "iv": (5, 2)}


def span(algebra, labels):
    return GradedSubspace.from_labels(algebra, labels)


# Test span_closure
def test_closure_of_generators(k10):
    generated = span_closure(k10, [k10[x] for x in ("e", "f", "p1", "q1")])
    assert generated == span(k10, ["e", "f", "c1", "p1", "q1"])
    assert generated.dims == (3, 2)


def test_closure_small_cases(k10):
    assert span_closure(k10, [k10["p1"]]) == span(k10, ["p1"])
    assert span_closure(k10, [k10["e"] + k10["f"]]).dim == 1
    # Mixed parities are split into their components.
    assert span_closure(k10, [k10["e"] + k10["p1"]]) == span(k10, ["e", "p1"])
    assert span_closure(k10, []) == GradedSubspace.zero(k10)


def test_closure_reaches_everything(k10):
    b = maximal_subalgebra("ii", k10)
    closure = span_closure(k10, b.basis() + [k10["b"]])
    assert not closure.is_proper()
    assert closure == GradedSubspace.full(k10)


def test_closure_rejects_foreign_generators(k10, tensor):
    with pytest.raises(AlgebraMismatchError):
        span_closure(k10, [tensor["1"]])


# Test predicates on subspaces
def test_subalgebra_and_ideal(k10):
    b = maximal_subalgebra("iv", k10)
    radical = span(k10, ["c1", "p1", "q1"])
    assert is_subalgebra(b)
    assert not is_subalgebra(span(k10, ["a"]))
    assert is_ideal(radical, b)
    assert not is_ideal(span(k10, ["e"]), b)
    with pytest.raises(ValueError):
        is_ideal(span(k10, ["p2"]), b)


def test_is_solvable(k10):
    assert is_solvable(span(k10, ["c1", "p1", "q1"]))
    assert is_solvable(span(k10, ["c1", "a+b", "p1+q1"]))
    assert is_solvable(GradedSubspace.zero(k10))
    assert not is_solvable(maximal_subalgebra("i", k10))
    assert not is_solvable(span(k10, ["e"]))


# Test quotients
def test_quotient_of_iv(k10):
    b = maximal_subalgebra("iv", k10)
    presentation = quotient(b, span(k10, ["c1", "p1", "q1"]), name="Q")
    q = presentation.quotient
    assert q.name == "Q"
    assert (q.dim_even, q.dim_odd) == (4, 0)
    assert sorted(q.labels) == ["[a]", "[b]", "[e]", "[f]"]
    assert presentation.representative("[a]") == k10["a"]
    assert q["[a]"] * q["[a]"] == 4 * q["[e]"]
    assert presentation.projection.source is presentation.parent


def test_quotient_of_iii_is_dt(k10):
    b = maximal_subalgebra("iii", k10)
    q = quotient(b, span(k10, ["c1", "a+b", "p1+q1"])).quotient
    assert (q.dim_even, q.dim_odd) == (2, 2)
    assert dt_parameter(q) == DtInvariant.from_t(-3)


def test_quotient_preconditions(k10):
    b = maximal_subalgebra("iv", k10)
    with pytest.raises(ValueError):
        quotient(b, span(k10, ["e"]))
    with pytest.raises(ValueError):
        quotient(span(k10, ["a"]), GradedSubspace.zero(k10))


# Test fixed points
def test_fixed_subalgebra(tensor, iso, k10):
    fixed = fixed_subalgebra(swap_automorphism())
    assert fixed.dims == (3, 2)
    back = iso.inverse()
    pulled = GradedSubspace.from_elements(k10, [back(x) for x in fixed.basis()])
    assert pulled == span(k10, ["e", "f", "c1+c2", "p1-q2", "p2-q1"])
    assert fixed_subalgebra(Morphism.identity(tensor)) == GradedSubspace.full(tensor)


def test_fixed_subalgebra_needs_automorphism(k10):
    with pytest.raises(ValueError):
        fixed_subalgebra(Morphism(k10, k10, 2 * Matrix.identity(10)))


# Test D_t parameters
@pytest.mark.parametrize(
    "t, pair",
    [
        (-3, (-3, Fraction(-1, 3))),
        (2, (Fraction(1, 2), 2)),
        (Fraction(-3, 2), (Fraction(-3, 2), Fraction(-2, 3))),
        (-1, (-1, -1)),
    ],
)
def test_dt_parameter(t, pair):
    invariant = dt_parameter(make_dt(t))
    assert invariant.t_pair == pair
    assert invariant.matches(t)
    assert invariant.matches(1 / Fraction(t))


def test_dt_invariant_display():
    invariant = DtInvariant.from_t(-3)
    assert str(invariant) == "{-3, -1/3}"
    assert invariant.to_strings() == ["-3", "-1/3"]
    degenerate = DtInvariant.from_t(0)
    assert degenerate.degenerate
    assert str(degenerate) == "degenerate"
    assert not degenerate.matches(1)


def test_dt_parameter_on_subspace(k10):
    summand = span(k10, ["f", "2*e + a", "p1", "p2"])
    assert dt_parameter(summand) == DtInvariant.from_t(Fraction(-3, 2))


def test_dt_parameter_preconditions(k3):
    with pytest.raises(ValueError, match="dims"):
        dt_parameter(k3)


def test_orthogonal_idempotents():
    d = make_dt(-3)
    first, second = orthogonal_idempotents(d)
    assert {first, second} == {d["e"], d["f"]}


# Test Witt maps on V
def test_v_coordinates(k10):
    assert v_coordinates(k10["a"] - 2 * k10["c2"]) == (1, 0, 0, -2)
    with pytest.raises(ValueError, match="not in V"):
        v_coordinates(k10["a"] + k10["e"])


def test_quadratic_norm_and_reflection():
    assert quadratic_norm((1, 0, 0, 0), K10_V_GRAM) == 4
    assert quadratic_norm((0, 1, 0, 0), K10_V_GRAM) == -4
    assert quadratic_norm((0, 0, 1, 1), K10_V_GRAM) == 4
    assert reflection((1, 0, 0, 0), K10_V_GRAM) == Matrix.diagonal([-1, 1, 1, 1])
    with pytest.raises(ReflectionDegenerateError):
        reflection((0, 0, 1, 0), K10_V_GRAM)


def test_witt_map(k10):
    target = -(k10["c1"] + k10["c2"])
    g = witt_map(k10["a"], target)
    assert g.apply((1, 0, 0, 0)) == (0, 0, -1, -1)
    assert g.transpose() @ K10_V_GRAM @ g == K10_V_GRAM
    assert witt_map(k10["a"], k10["a"]) == Matrix.identity(4)


def test_witt_map_rejects(k10):
    with pytest.raises(ValueError, match="norms differ"):
        witt_map(k10["a"], k10["b"])
    with pytest.raises(ValueError, match="isotropic"):
        witt_map(k10["c1"], k10["c1"])


# Test the maximal subalgebras
@pytest.mark.parametrize("kind", KINDS)
def test_maximal_subalgebra(k10, kind):
    b = maximal_subalgebra(kind, k10)
    assert b.dims == MAXIMAL_DIMS[kind]
    assert b.is_subalgebra()
    assert b.contains(k10["e"] + k10["f"])


def test_require_kind():
    assert require_kind("iii") == "iii"
    with pytest.raises(ValueError, match="Unknown subalgebra kind"):
        require_kind("v")
    with pytest.raises(ValueError):
        maximal_subalgebra("I")


@pytest.mark.parametrize("kind", KINDS)
def test_probe_accepts_maximal(k10, kind):
    b = maximal_subalgebra(kind, k10)
    result = maximality_probe(b, trials=5, seed=2)
    assert result.verdict == PROBABLY_MAXIMAL
    assert result.maximal
    assert result.checked == 10 - b.dim + 5
    assert result.to_dict() == {"verdict": PROBABLY_MAXIMAL, "checked": result.checked}


def test_probe_refutes(k10):
    generated = span(k10, ["e", "f", "c1", "p1", "q1"])
    result = maximality_probe(generated, trials=3)
    assert result.verdict == NOT_MAXIMAL
    assert result.witness == k10["a"]
    assert result.witness_closure.is_proper()
    assert result.saturation == maximal_subalgebra("iv", k10)
    assert result.to_dict()["witness"] == "a"


def test_probe_is_deterministic(k10):
    b = maximal_subalgebra("ii", k10)
    assert maximality_probe(b, 8, 4, jobs=1) == maximality_probe(b, 8, 4, jobs=3)


def test_probe_preconditions(k10):
    with pytest.raises(ValueError, match="not proper"):
        maximality_probe(GradedSubspace.full(k10))
    with pytest.raises(ValueError, match="not a subalgebra"):
        maximality_probe(span(k10, ["a"]))


def test_saturate(k10):
    assert saturate(span(k10, ["e", "f", "c1", "p1", "q1"])) == maximal_subalgebra(
        "iv", k10
    )
