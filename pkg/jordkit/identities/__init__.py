from jordkit.identities.checks import (
    CHARACTERISTIC_NOTE,
    check_associativity,
    check_jordan,
    check_jordan_superalgebra,
    check_super_jordan,
    check_supercommutativity,
    jordan_defect,
    super_jordan_defect,
)
from jordkit.identities.envelope import check_envelope_jordan, grassmann_envelope

__all__ = [
    "CHARACTERISTIC_NOTE",
    "check_associativity",
    "check_jordan",
    "check_jordan_superalgebra",
    "check_super_jordan",
    "check_supercommutativity",
    "jordan_defect",
    "super_jordan_defect",
    "check_envelope_jordan",
    "grassmann_envelope",
]
