"""
claims.py

The full verification suite behind ``jord verify``: every construction in
jordkit checked end to end, one Claim per statement. Computed values that
differ from the values stated for them come out as deviations.
"""
from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from jordkit.algebra import (
    GradedSubspace,
    SuperForm,
    is_unit,
    make_bilinear_jordan,
    make_dt,
    make_grassmann,
    make_k3,
    make_matrix_algebra,
    make_plus,
    make_superform_algebra,
    standard_k10,
)
from jordkit.conversions import load_algebra
from jordkit.errors import NonSquareScalar, VerificationError
from jordkit.fixtures import FIXTURE_DIR, fixture_path
from jordkit.identities import (
    check_associativity,
    check_envelope_jordan,
    check_jordan_superalgebra,
    check_super_jordan,
)
from jordkit.linalg import Matrix
from jordkit.morphisms import (
    WreathElement,
    benkart_elduque_iso,
    block_map,
    factor_orthogonal,
    grading_automorphism,
    image_subspace,
    is_automorphism,
    lift_orthogonal_to_aut,
    phi,
    psi,
    psi_tilde,
    random_symplectic,
    random_wreath,
    standard_iso,
    swap_automorphism,
    tensor_action,
)
from jordkit.report import DEVIATION, FAIL, PASS, Claim
from jordkit.subalgebras import (
    KINDS,
    conjugation_target,
    conjugation_witness,
    fixed_subalgebra,
    maximal_subalgebra,
    maximality_probe,
    negation_automorphism,
    span_closure,
    structure_report,
    witt_map,
)
from jordkit.utils import SeededSampler

logger = logging.getLogger(__name__)

# Number of random group elements per homomorphism identity.
GROUP_SAMPLES = 20

MAXIMAL_DIMS = {"i": (6, 0), "ii": (3, 2), "iii": (4, 3), "iv": (5, 2)}


@dataclass(frozen=True)
class SuiteOptions:
    seed: int = 1
    trials: int = 200
    envelope_degree: int = 3
    jobs: int = 1
    fixtures: Path = FIXTURE_DIR


def _report_claim(name: str, reports) -> Claim:
    failed = [report for report in reports if not report.passed]
    if failed:
        return Claim(name, FAIL, failed[0].summary(limit=1).replace("\n", ";"))
    checked = sum(report.checked for report in reports)
    return Claim(name, PASS, f"{checked} instances")


def _axioms(options: SuiteOptions) -> list[Claim]:
    k10 = load_algebra(fixture_path("k10.json", options.fixtures))
    tensor = load_algebra(fixture_path("k10-tensor.json", options.fixtures))
    claims = [
        _report_claim("k10.axioms", check_jordan_superalgebra(k10, options.jobs)),
        Claim.check(
            "k10.fixture-table",
            k10.entries() == standard_k10().entries(),
            "k10.json matches the built-in table",
        ),
        _report_claim("tensor.axioms", check_jordan_superalgebra(tensor, options.jobs)),
        Claim.check("tensor.unit", is_unit(tensor, tensor["1"]), "1 is a unit"),
    ]
    try:
        iso = benkart_elduque_iso(k10, tensor)
    except VerificationError as error:
        claims.append(Claim("tensor.isomorphism", FAIL, error.detail))
    else:
        determinant = iso.matrix.determinant()
        claims.append(
            Claim.check("tensor.isomorphism", bool(determinant), f"det = {determinant}")
        )
    return claims


def _catalog(options: SuiteOptions) -> list[Claim]:
    algebras = [make_k3()] + [make_dt(t) for t in (-3, -6, 1, 2, Fraction(-3, 2))]
    algebras.append(
        make_superform_algebra(
            SuperForm(Matrix.identity(2), Matrix.from_rows([[0, 1], [-1, 0]]))
        )
    )
    algebras.append(make_bilinear_jordan(Matrix.diagonal([1, 1, -1])))
    algebras.append(make_plus(make_matrix_algebra(2)))
    reports = []
    for algebra in algebras:
        reports.extend(check_jordan_superalgebra(algebra, options.jobs))
    claims = [_report_claim("catalog.axioms", reports)]
    grassmann = make_grassmann(3)
    claims.append(
        _report_claim("catalog.grassmann-associative", [check_associativity(grassmann)])
    )
    return claims


def _envelope(options: SuiteOptions) -> list[Claim]:
    k10 = standard_k10()
    broken = load_algebra(fixture_path("broken.json", options.fixtures))
    envelope = check_envelope_jordan(
        k10, options.envelope_degree, options.trials, options.seed, options.jobs
    )
    broken_direct = check_super_jordan(broken, options.jobs)
    broken_envelope = check_envelope_jordan(
        broken, options.envelope_degree, options.trials, options.seed, options.jobs
    )
    detail = (
        f"{len(broken_direct.witnesses)} direct and"
        f" {len(broken_envelope.witnesses)} envelope witnesses"
    )
    return [
        _report_claim("envelope.k10", [envelope]),
        Claim.check(
            "envelope.broken-detected",
            not broken_direct.passed and not broken_envelope.passed,
            detail,
        ),
    ]


def _group(options: SuiteOptions) -> list[Claim]:
    sampler = SeededSampler(options.seed)
    pairs = [
        (random_wreath(sampler.split(2 * k)), random_wreath(sampler.split(2 * k + 1)))
        for k in range(GROUP_SAMPLES)
    ]
    delta = swap_automorphism()
    tau = grading_automorphism(delta.source)
    minus = WreathElement(-Matrix.identity(2), -Matrix.identity(2))
    claims = [
        Claim.check(
            "group.psi-phi",
            all(psi(phi(w)) == psi_tilde(w) for w, _ in pairs),
            f"{GROUP_SAMPLES} elements",
        ),
        Claim.check(
            "group.phi-homomorphism",
            all(phi(w1 * w2) == phi(w1).compose(phi(w2)) for w1, w2 in pairs),
            f"{GROUP_SAMPLES} pairs",
        ),
        Claim.check(
            "group.swap-conjugation",
            all(
                delta.compose(tensor_action(w.f, w.g)).compose(delta)
                == tensor_action(w.g, w.f)
                for w, _ in pairs
            ),
            f"{GROUP_SAMPLES} elements",
        ),
        Claim.check(
            "group.kernels",
            phi(minus) == tau
            and psi_tilde(minus).matrix == Matrix.identity(4)
            and psi(tau).matrix == Matrix.identity(4),
            "phi(-id,-id) = tau, psi_tilde(-id,-id) = id, psi(tau) = id",
        ),
    ]
    roundtrip, lifted = True, True
    for w, _ in pairs:
        m = psi_tilde(w)
        roundtrip = roundtrip and factor_orthogonal(m).equal_up_to_sign(w)
        lifted = lifted and psi(lift_orthogonal_to_aut(m)) == m
    claims.append(Claim.check("group.factor-orthogonal", roundtrip, "up to ±(id, id)"))
    claims.append(Claim.check("group.lift", lifted, "psi(lift(m)) = m"))

    dt = make_dt(-3)
    superform = make_superform_algebra(
        SuperForm(Matrix.identity(2), Matrix.from_rows([[0, 1], [-1, 0]]))
    )
    rotation = Matrix.from_rows(
        [[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]]
    )
    spot = True
    for k in range(GROUP_SAMPLES):
        f = random_symplectic(sampler.split(1000 + k))
        spot = spot and is_automorphism(block_map(dt, f, (2, 3)))
        spot = spot and is_automorphism(
            block_map(superform, f, (3, 4)).compose(
                block_map(superform, rotation, (1, 2))
            )
        )
    claims.append(
        Claim.check("group.spot-checks", spot, "symplectic lifts to D(-3), superform")
    )
    return claims


def _maximal(options: SuiteOptions) -> list[Claim]:
    k10 = standard_k10()
    claims = []
    for kind in KINDS:
        try:
            b = maximal_subalgebra(kind, k10)
        except VerificationError as error:
            claims.append(Claim(f"maximal.{kind}", FAIL, error.detail))
            continue
        probe = maximality_probe(b, options.trials, options.seed, options.jobs)
        claims.append(
            Claim.check(
                f"maximal.{kind}",
                b.dims == MAXIMAL_DIMS[kind] and probe.maximal,
                f"dims {b.dims}, {probe.verdict} after {probe.checked} adjunctions",
            )
        )
    generated = span_closure(k10, [k10[label] for label in ("e", "f", "p1", "q1")])
    probe = maximality_probe(generated, options.trials, options.seed, options.jobs)
    claims.append(
        Claim.check(
            "maximal.refutation",
            generated == GradedSubspace.from_labels(k10, ["e", "f", "c1", "p1", "q1"])
            and not probe.maximal
            and probe.saturation == maximal_subalgebra("iv", k10),
            f"{generated}: {probe.verdict}, witness {probe.witness}",
        )
    )
    return claims


def _structure(options: SuiteOptions) -> list[Claim]:
    claims = []
    for kind in KINDS:
        report = structure_report(kind)
        failed = [c for c in report.claims if c.status == FAIL]
        deviations = report.deviations
        if failed:
            claims.append(Claim(f"structure.{kind}", FAIL, failed[0].name))
        elif deviations:
            detail = "; ".join(f"{c.name}: {c.detail}" for c in deviations)
            claims.append(Claim(f"structure.{kind}", DEVIATION, detail))
        else:
            claims.append(
                Claim(f"structure.{kind}", PASS, f"{len(report.claims)} claims")
            )
    return claims


def _conjugations(options: SuiteOptions) -> list[Claim]:
    k10, iso = standard_k10(), standard_iso()
    claims = []
    for kind in ("iii", "iv"):
        image = image_subspace(iso, maximal_subalgebra(kind, k10))
        claims.append(
            Claim.check(
                f"conjugation.{kind}", image == conjugation_target(kind), str(image)
            )
        )
    fixed = fixed_subalgebra(swap_automorphism())
    pulled = image_subspace(iso.inverse(), fixed)
    expected = GradedSubspace.from_labels(k10, ["e", "f", "c1+c2", "p1-q2", "p2-q1"])
    claims.append(
        Claim.check("conjugation.fixed-points", pulled == expected, str(pulled))
    )
    for kind in ("ii", "iii", "iv"):
        try:
            conjugation_witness(kind)
        except (VerificationError, NonSquareScalar) as error:
            claims.append(Claim(f"conjugation.witness-{kind}", FAIL, str(error)))
        else:
            claims.append(Claim(f"conjugation.witness-{kind}", PASS, "verified"))
    g = witt_map(k10["a"], k10["c1"] + k10["c2"])
    claims.append(
        Claim.check("conjugation.witt", bool(g.determinant()), "a -> c1 + c2")
    )
    try:
        negation_automorphism()
    except (VerificationError, NonSquareScalar) as error:
        claims.append(Claim("conjugation.negation", FAIL, str(error)))
    else:
        claims.append(
            Claim("conjugation.negation", PASS, "<e,f,a,p1,p2> -> <e,f,a,q1,q2>")
        )
    return claims


SECTIONS: tuple[Callable[[SuiteOptions], list[Claim]], ...] = (
    _axioms,
    _catalog,
    _envelope,
    _group,
    _maximal,
    _structure,
    _conjugations,
)


@dataclass(frozen=True)
class SuiteResult:
    claims: tuple[Claim, ...]

    @property
    def passed(self) -> bool:
        return all(claim.status != FAIL for claim in self.claims)

    @property
    def deviations(self) -> list[Claim]:
        return [claim for claim in self.claims if claim.status == DEVIATION]

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "claims": [claim.to_dict() for claim in self.claims],
            "deviations": [claim.to_dict() for claim in self.deviations],
        }


def run_suite(options: SuiteOptions = SuiteOptions()) -> SuiteResult:
    """
    Runs every section in order.

    Raises:
        OSError: If a fixture cannot be read.
    """
    claims: list[Claim] = []
    for section in SECTIONS:
        found = section(options)
        logger.info("%s: %d claims", section.__name__.strip("_"), len(found))
        claims.extend(found)
    return SuiteResult(tuple(claims))
