from jordkit.subalgebras.closure import (
    QuotientPresentation,
    fixed_subalgebra,
    is_ideal,
    is_solvable,
    is_subalgebra,
    quotient,
    span_closure,
)
from jordkit.subalgebras.dt import DtInvariant, dt_parameter, orthogonal_idempotents
from jordkit.subalgebras.maximal import (
    KINDS,
    MAXIMAL_BASES,
    NOT_MAXIMAL,
    PROBABLY_MAXIMAL,
    ProbeResult,
    maximal_subalgebra,
    maximality_probe,
    require_kind,
    saturate,
)
from jordkit.subalgebras.structure import (
    CONJUGATION_KINDS,
    StructureReport,
    conjugation_target,
    conjugation_witness,
    lift_isometry,
    negation_automorphism,
    quotient_form_iso,
    structure_report,
)
from jordkit.subalgebras.witt import quadratic_norm, reflection, v_coordinates, witt_map

__all__ = [
    "QuotientPresentation",
    "fixed_subalgebra",
    "is_ideal",
    "is_solvable",
    "is_subalgebra",
    "quotient",
    "span_closure",
    "DtInvariant",
    "dt_parameter",
    "orthogonal_idempotents",
    "KINDS",
    "MAXIMAL_BASES",
    "NOT_MAXIMAL",
    "PROBABLY_MAXIMAL",
    "ProbeResult",
    "maximal_subalgebra",
    "maximality_probe",
    "require_kind",
    "saturate",
    "CONJUGATION_KINDS",
    "StructureReport",
    "conjugation_target",
    "conjugation_witness",
    "lift_isometry",
    "negation_automorphism",
    "quotient_form_iso",
    "structure_report",
    "quadratic_norm",
    "reflection",
    "v_coordinates",
    "witt_map",
]
