import pytest

from jordkit.claims import SECTIONS, SuiteOptions, SuiteResult, run_suite
from jordkit.report import DEVIATION, FAIL, PASS, Claim


@pytest.fixture(scope="module")
def result():
    return run_suite(SuiteOptions(trials=4, envelope_degree=2))


# Test the full suite
def test_suite_passes(result):
    assert result.passed
    assert len(result.claims) >= 13
    assert not [claim for claim in result.claims if claim.status == FAIL]


def test_suite_claim_names(result):
    names = [claim.name for claim in result.claims]
    assert len(names) == len(set(names))
    for expected in (
        "k10.axioms",
        "tensor.isomorphism",
        "envelope.broken-detected",
        "group.factor-orthogonal",
        "maximal.refutation",
        "structure.iii",
        "conjugation.fixed-points",
        "conjugation.witness-ii",
    ):
        assert expected in names


def test_suite_reports_the_dt_deviation(result):
    deviations = result.deviations
    assert [claim.name for claim in deviations] == ["structure.ii"]
    assert "{-3/2, -2/3}" in deviations[0].detail


def test_suite_sections():
    assert len(SECTIONS) == 7


def test_suite_result_to_dict():
    result = SuiteResult(
        (Claim("x", PASS, "ok"), Claim("y", DEVIATION, "differs"))
    )
    data = result.to_dict()
    assert data["passed"] is True
    assert data["deviations"] == [
        {"claim": "y", "status": DEVIATION, "detail": "differs"}
    ]
    assert not SuiteResult((Claim("z", FAIL),)).passed
