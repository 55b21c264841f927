from fractions import Fraction

import pytest

from jordkit.algebra import GradedSubspace
from jordkit.errors import NonSquareScalar
from jordkit.linalg import Matrix
from jordkit.morphisms import (
    Morphism,
    image_subspace,
    is_automorphism,
    is_isomorphism,
    swap_automorphism,
)
from jordkit.report import DEVIATION, PASS
from jordkit.subalgebras import (
    CONJUGATION_KINDS,
    KINDS,
    DtInvariant,
    conjugation_target,
    conjugation_witness,
    fixed_subalgebra,
    lift_isometry,
    maximal_subalgebra,
    negation_automorphism,
    quotient_form_iso,
    structure_report,
)


@pytest.fixture(scope="module")
def reports():
    return {kind: structure_report(kind) for kind in KINDS}


# Test the structure reports
@pytest.mark.parametrize("kind", KINDS)
def test_report_passes(reports, kind):
    report = reports[kind]
    assert report.kind == kind
    assert report.passed
    assert report.require() is report
    assert report.claim("subalgebra").status == PASS
    assert all(claim.name.startswith(f"{kind}.") for claim in report.claims)


def test_report_i(reports):
    report = reports["i"]
    assert not report.deviations
    assert report.claim("bilinear-form").status == PASS
    ideal_f, ideal_j = report.data["summands"]
    assert ideal_f.dims == (1, 0)
    assert ideal_j.dims == (5, 0)


def test_report_ii_records_deviation(reports, k10):
    report = reports["ii"]
    assert report.passed
    assert [claim.name for claim in report.deviations] == ["ii.dt-summand"]
    detail = report.claim("dt-summand").detail
    assert "{-3/2, -2/3}" in detail
    assert "{-6, -1/6}" in detail
    assert report.data["dt"] == DtInvariant.from_t(Fraction(-3, 2))
    assert report.data["idempotent"] == (2 * k10["e"] - k10["a"]) / 4


def test_report_iii(reports, k10):
    report = reports["iii"]
    assert not report.deviations
    assert report.claim("quotient-dt").status == PASS
    assert report.data["dt"] == DtInvariant.from_t(-3)
    assert report.data["radical"] == GradedSubspace.from_labels(
        k10, ["c1", "a+b", "p1+q1"]
    )


def test_report_iv(reports):
    report = reports["iv"]
    assert not report.deviations
    iso = report.data["iso"]
    assert iso.target.name == "T+F"
    assert is_isomorphism(iso)


def test_report_to_dict(reports):
    data = reports["ii"].to_dict()
    assert data["kind"] == "ii"
    assert data["passed"] is True
    assert {"claim": "ii.dt-summand", "status": DEVIATION} == {
        key: value
        for key, value in data["claims"][-1].items()
        if key != "detail"
    }


def test_structure_report_unknown_kind():
    with pytest.raises(ValueError):
        structure_report("v")


def test_quotient_form_iso(reports):
    q = reports["iv"].data["quotient"].quotient
    iso = quotient_form_iso(q)
    assert iso.source is q
    assert iso(q["[a]"]) == iso.target["T.a"]


# Test the conjugations into the tensor model
def test_conjugation_targets(tensor):
    assert conjugation_target("iii").dims == (4, 3)
    assert conjugation_target("iv").dims == (5, 2)
    assert conjugation_target("ii") == fixed_subalgebra(swap_automorphism())
    with pytest.raises(ValueError):
        conjugation_target("i")


@pytest.mark.parametrize("kind", ["iii", "iv"])
def test_identity_witnesses(k10, iso, kind):
    assert conjugation_witness(kind) == Morphism.identity(k10)
    image = image_subspace(iso, maximal_subalgebra(kind, k10))
    assert image == conjugation_target(kind)


def test_witness_ii(k10, iso):
    w = conjugation_witness("ii")
    assert is_automorphism(w)
    b = maximal_subalgebra("ii", k10)
    assert image_subspace(w, b) == GradedSubspace.from_labels(
        k10, ["e", "f", "c1+c2", "p1-q2", "p2-q1"]
    )
    assert image_subspace(iso.compose(w), b) == conjugation_target("ii")


def test_conjugation_kinds():
    assert CONJUGATION_KINDS == ("ii", "iii", "iv")


# Test lifts of isometries of V
def test_lift_isometry(k10):
    w = lift_isometry(Matrix.diagonal([-1, 1, 1, 1]))
    assert is_automorphism(w)
    assert w(k10["a"]) == -k10["a"]
    assert w(k10["c1"]) == k10["c1"]


def test_lift_isometry_needs_square():
    g = Matrix.diagonal([1, 1, 2, Fraction(1, 2)])
    with pytest.raises(NonSquareScalar) as info:
        lift_isometry(g)
    assert info.value.gamma == 2


def test_negation_automorphism(k10):
    w = negation_automorphism()
    image = image_subspace(w, maximal_subalgebra("ii", k10))
    assert image == GradedSubspace.from_labels(k10, ["e", "f", "a", "q1", "q2"])
