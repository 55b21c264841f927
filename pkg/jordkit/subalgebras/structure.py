"""
structure.py

Structure of the maximal subalgebras of K10 (semisimple part, radical and
quotient), and explicit automorphisms carrying them onto their description
inside the tensor model F·1 ⊕ K3⊗K3.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from jordkit.algebra import (
    K10_V_GRAM,
    GradedSubspace,
    SuperAlgebra,
    direct_sum,
    king_decomposition,
    make_bilinear_jordan,
    make_unit_algebra,
    standard_k10,
    standard_k10_tensor,
)
from jordkit.errors import NonSquareScalar, VerificationError
from jordkit.identities import check_jordan
from jordkit.linalg import Matrix, Subspace, invert, nullspace
from jordkit.morphisms import (
    V_INDICES,
    Morphism,
    OrthogonalMap,
    WreathElement,
    conjugate,
    image_subspace,
    is_automorphism,
    is_isomorphism,
    lift_orthogonal_to_aut,
    phi,
    standard_iso,
    swap_automorphism,
)
from jordkit.report import DEVIATION, FAIL, Claim
from jordkit.subalgebras.closure import fixed_subalgebra, is_solvable, quotient
from jordkit.subalgebras.dt import DtInvariant, dt_parameter
from jordkit.subalgebras.maximal import maximal_subalgebra, require_kind
from jordkit.subalgebras.witt import K10_V_INDICES, v_coordinates, witt_map

logger = logging.getLogger(__name__)

RADICALS = {
    "iii": ("c1", "a+b", "p1+q1"),
    "iv": ("c1", "p1", "q1"),
}

# Parameter the (ii) summand is stated to have.
STATED_DT_II = -6
STATED_DT_III = -3

CONJUGATION_KINDS = ("ii", "iii", "iv")

# Descriptions inside the tensor model; (ii) is the fixed subalgebra of δ.
TENSOR_TARGETS = {
    "iii": ("1", "ee", "xx", "xy", "ex", "xe", "ey"),
    "iv": ("1", "ee", "xx", "yy", "xy", "xe", "ey"),
}

FIXED_PULLBACK = ("e", "f", "c1+c2", "p1-q2", "p2-q1")


@dataclass(frozen=True)
class StructureReport:
    """
    :ivar kind: Which maximal subalgebra, i to iv.
    :vartype kind: str
    :ivar claims: Verified statements in evaluation order.
    :vartype claims: tuple[Claim, ...]
    :ivar data: Computed objects (radical, quotient, dt invariant).
    :vartype data: dict[str, Any]
    """

    kind: str
    claims: tuple[Claim, ...]
    data: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return all(claim.status != FAIL for claim in self.claims)

    @property
    def deviations(self) -> list[Claim]:
        return [claim for claim in self.claims if claim.status == DEVIATION]

    def claim(self, name: str) -> Claim:
        return next(c for c in self.claims if c.name == f"{self.kind}.{name}")

    def require(self) -> StructureReport:
        """
        Raises:
            VerificationError: Naming the first failed claim.
        """
        for claim in self.claims:
            if claim.status == FAIL:
                raise VerificationError(claim.name, claim.detail)
        return self

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "claims": [claim.to_dict() for claim in self.claims],
        }


def _structure_i(k10: SuperAlgebra, b: GradedSubspace, claim) -> dict[str, Any]:
    try:
        ideal_f, ideal_j = king_decomposition(k10)
    except VerificationError as error:
        claim("king-decomposition", False, error.detail)
        return {}
    claim("king-decomposition", True, f"{ideal_f} + {ideal_j}")
    j = ideal_j.restrict(name="J(V,Q)")
    claim("jordan", check_jordan(j).passed, f"{j.name} satisfies the Jordan identity")
    form = make_bilinear_jordan(
        K10_V_GRAM, labels=("a", "b", "c1", "c2"), unit_label="e"
    )
    iso = Morphism(j, form, Matrix.identity(j.dim))
    claim(
        "bilinear-form",
        j.labels == form.labels and is_isomorphism(iso),
        "e is the unit and v·w = Q(v, w)e on span{a, b, c1, c2}",
    )
    return {"summands": (ideal_f, ideal_j)}


def _structure_ii(k10: SuperAlgebra, b: GradedSubspace, claim) -> dict[str, Any]:
    idempotent = (2 * k10["e"] - k10["a"]) / 4
    line = GradedSubspace.from_elements(k10, [idempotent])
    summand = GradedSubspace.from_labels(k10, ["f", "2*e + a", "p1", "p2"])
    claim("idempotent", idempotent * idempotent == idempotent, f"({idempotent})²")
    claim(
        "direct-sum",
        line.sum(summand) == b and line.intersect(summand).dim == 0,
        f"B = <{idempotent}> + {summand}",
    )
    claim("F-ideal", line.is_ideal_of(b), f"<{idempotent}> is an ideal of B")
    claim("summand-ideal", summand.is_ideal_of(b), f"{summand} is an ideal of B")
    claim(
        "zero-cross-products",
        line.product_span(summand).dim == 0 and summand.product_span(line).dim == 0,
    )
    claim("annihilates-odd", (idempotent * k10["p1"]).is_zero(), "(2e - a)·p1 = 0")
    invariant = dt_parameter(summand)
    stated = DtInvariant.from_t(STATED_DT_II)
    detail = f"computed {invariant}, stated {stated}"
    if invariant.degenerate:
        claim("dt-summand", False, detail)
    elif invariant == stated:
        claim("dt-summand", True, detail)
    else:
        claim("dt-summand", DEVIATION, detail)
    return {"idempotent": idempotent, "summand": summand, "dt": invariant}


def _radical_claims(
    k10: SuperAlgebra, b: GradedSubspace, kind: str, claim
) -> tuple[GradedSubspace, Any]:
    radical = GradedSubspace.from_labels(k10, RADICALS[kind])
    claim("radical-ideal", radical.is_ideal_of(b), f"R = {radical}")
    square = radical.product_span(radical)
    claim("radical-solvable", is_solvable(radical), f"R² = {square}")
    return radical, quotient(b, radical, name=f"B({kind})/R")


def _structure_iii(k10: SuperAlgebra, b: GradedSubspace, claim) -> dict[str, Any]:
    radical, presentation = _radical_claims(k10, b, "iii", claim)
    q = presentation.quotient
    claim("quotient-dims", (q.dim_even, q.dim_odd) == (2, 2), f"labels {q.labels}")
    invariant = dt_parameter(q)
    stated = DtInvariant.from_t(STATED_DT_III)
    claim("quotient-dt", invariant == stated, f"computed {invariant}, stated {stated}")
    return {"radical": radical, "quotient": presentation, "dt": invariant}


def quotient_form_iso(q: SuperAlgebra) -> Morphism:
    """
    The isomorphism from B(iv)/R onto T ⊕ F, T the bilinear-form algebra
    with ā² = 4ē, b̄² = -4ē, ā·b̄ = 0 and F = Ff̄, matching [x] with x.
    """
    form = make_bilinear_jordan(
        Matrix.diagonal([4, -4]), labels=("a", "b"), unit_label="e", name="T"
    )
    target = direct_sum(form, make_unit_algebra("f", name="F"), name="T+F")
    by_name = {label.split(".", 1)[1]: label for label in target.labels}
    images = [target[by_name[label.strip("[]")]] for label in q.labels]
    return Morphism.from_images(q, target, images)


def _structure_iv(k10: SuperAlgebra, b: GradedSubspace, claim) -> dict[str, Any]:
    radical, presentation = _radical_claims(k10, b, "iv", claim)
    q = presentation.quotient
    claim("quotient-dims", (q.dim_even, q.dim_odd) == (4, 0), f"labels {q.labels}")
    try:
        iso = quotient_form_iso(q)
    except (KeyError, ValueError) as error:
        claim("quotient-iso", False, str(error))
        return {"radical": radical, "quotient": presentation}
    claim("quotient-iso", is_isomorphism(iso), f"{q.name} ≅ {iso.target.name}")
    return {"radical": radical, "quotient": presentation, "iso": iso}


_STRUCTURE = {
    "i": _structure_i,
    "ii": _structure_ii,
    "iii": _structure_iii,
    "iv": _structure_iv,
}


def structure_report(kind: str, k10: Optional[SuperAlgebra] = None) -> StructureReport:
    """
    Assembles and verifies the structure of maximal subalgebra `kind`:
    (i) the split of the even part as Ff ⊕ J(V,Q); (ii) the idempotent
    (2e - a)/4 spanning a summand F and the D_t parameter of the other
    summand; (iii) the radical ⟨c1, a+b, p1+q1⟩ and the D_t parameter of
    the quotient; (iv) the radical ⟨c1, p1, q1⟩ and the isomorphism of the
    quotient with T ⊕ F.

    A computed value that differs from the value stated for it is recorded
    as a deviation, not a failure.
    """
    require_kind(kind)
    k10 = k10 or standard_k10()
    b = maximal_subalgebra(kind, k10)
    claims: list[Claim] = []

    def claim(name: str, outcome, detail: str = ""):
        if outcome == DEVIATION:
            claims.append(Claim(f"{kind}.{name}", DEVIATION, detail))
        else:
            claims.append(Claim.check(f"{kind}.{name}", bool(outcome), detail))

    claim("subalgebra", b.is_subalgebra() and b.is_proper(), f"dims {b.dims}")
    data = _STRUCTURE[kind](k10, b, claim)
    data["subalgebra"] = b
    logger.info("structure of (%s): %d claims", kind, len(claims))
    return StructureReport(kind, tuple(claims), data)


# Conjugation into the tensor model


def conjugation_target(kind: str) -> GradedSubspace:
    """The description of maximal subalgebra `kind` inside the tensor model."""
    require_kind(kind, CONJUGATION_KINDS)
    if kind == "ii":
        return fixed_subalgebra(swap_automorphism())
    return GradedSubspace.from_labels(standard_k10_tensor(), TENSOR_TARGETS[kind])


def _v_transfer(iso: Morphism) -> Matrix:
    """The matrix of iso on V: K10 coordinates a, b, c1, c2 to xx, xy, yx, yy."""
    return iso.matrix.submatrix(V_INDICES, K10_V_INDICES)


def lift_isometry(g: Matrix, iso: Optional[Morphism] = None) -> Morphism:
    """
    An automorphism of K10 acting on V = span{a, b, c1, c2} by the isometry
    g of Q: g is moved into the tensor model, lifted through
    lift_orthogonal_to_aut and moved back.

    Raises:
        NonSquareScalar: If the lift needs an irrational square root.
    """
    iso = iso or standard_iso()
    transfer = _v_transfer(iso)
    lifted = lift_orthogonal_to_aut(
        OrthogonalMap(transfer @ g @ invert(transfer)), iso.target
    )
    return conjugate(lifted, iso.inverse())


def _one_sided_lift(v1, v2, iso: Morphism) -> Optional[Morphism]:
    """
    An automorphism Φ(id, g) or Φ(f, id) of the tensor model sending v1 to
    v2 in V, found by solving M1·gᵀ = M2 or f·M1 = M2 on the coefficient
    matrices; pulled back to K10.
    """
    transfer = _v_transfer(iso)
    m1 = Matrix(2, 2, transfer.apply(v1))
    m2 = Matrix(2, 2, transfer.apply(v2))
    if m1.determinant() == 0:
        return None
    identity = Matrix.identity(2)
    candidates = (
        (identity, (invert(m1) @ m2).transpose()),
        (m2 @ invert(m1), identity),
    )
    for f, g in candidates:
        if f.determinant() == 1 and g.determinant() == 1:
            lifted = phi(WreathElement(f, g), iso.target)
            return conjugate(lifted, iso.inverse())
    return None


def _odd_eigenspace(x, eigenvalue: int) -> GradedSubspace:
    """{z odd : x·z = eigenvalue·z}."""
    a = x.algebra
    odd = list(a.odd_indices)
    left = Matrix.from_columns([(x * a.basis_element(j)).coords for j in odd])
    size = len(odd)
    block = left.submatrix(odd, list(range(size))) - eigenvalue * Matrix.identity(size)
    return GradedSubspace(
        a, Subspace.zero(a.dim_even), Subspace(size, nullspace(block))
    )


def conjugation_witness(kind: str) -> Morphism:
    """
    An automorphism w of K10 such that the standard isomorphism carries
    w(B) onto conjugation_target(kind), B = maximal_subalgebra(kind).

    For (iii) and (iv) w is the identity. For (ii), w acts on V by an
    isometry sending a to -(c1 + c2): the odd part of B is the
    1-eigenspace of a, and the odd part of the fixed subalgebra of δ is the
    (-1)-eigenspace of c1 + c2.

    Raises:
        NonSquareScalar: If no rational lift is found for (ii).
        VerificationError: If the witness fails its checks.
    """
    require_kind(kind, CONJUGATION_KINDS)
    k10, iso = standard_k10(), standard_iso()
    b = maximal_subalgebra(kind, k10)
    if kind != "ii":
        witness = Morphism.identity(k10)
    else:
        source = k10["a"]
        target = -(k10["c1"] + k10["c2"])
        try:
            witness = lift_isometry(witt_map(source, target), iso)
        except NonSquareScalar as error:
            logger.info("isometry lift needs sqrt(%s); solving directly", error.gamma)
            witness = _one_sided_lift(
                v_coordinates(source), v_coordinates(target), iso
            )
            if witness is None:
                raise
        pulled_back = GradedSubspace.from_labels(k10, FIXED_PULLBACK)
        if image_subspace(witness, b) != pulled_back:
            raise VerificationError("conjugation-ii", "image is not the fixed points")
        eigenspace = _odd_eigenspace(k10["c1"] + k10["c2"], -1)
        if pulled_back.odd != eigenspace.odd:
            raise VerificationError("conjugation-ii", "odd part is not an eigenspace")
    if not is_automorphism(witness):
        raise VerificationError(f"conjugation-{kind}", "witness is not an automorphism")
    if image_subspace(iso.compose(witness), b) != conjugation_target(kind):
        raise VerificationError(f"conjugation-{kind}", "image differs from the target")
    logger.info("verified conjugation witness for (%s)", kind)
    return witness


def negation_automorphism() -> Morphism:
    """
    The lift of the isometry a ↦ -a, fixing b, c1 and c2. It carries
    ⟨e, f, a, p1, p2⟩ onto ⟨e, f, a, q1, q2⟩.
    """
    k10 = standard_k10()
    witness = lift_isometry(Matrix.diagonal([-1, 1, 1, 1]))
    expected = GradedSubspace.from_labels(k10, ["e", "f", "a", "q1", "q2"])
    if image_subspace(witness, maximal_subalgebra("ii", k10)) != expected:
        raise VerificationError("negation", f"image is not {expected}")
    return witness
