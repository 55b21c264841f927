from jordkit.algebra.catalog import (
    K3_FORM,
    K3_LABELS,
    K10_LABELS,
    K10_V_GRAM,
    TENSOR_LABELS,
    SuperForm,
    king_decomposition,
    make_bilinear_jordan,
    make_dt,
    make_k3,
    make_k10_broken,
    make_k10_table,
    make_k10_tensor,
    make_matrix_algebra,
    make_plus,
    make_superform_algebra,
    make_unit_algebra,
    standard_k3,
    standard_k10,
    standard_k10_tensor,
    table_from_rows,
)
from jordkit.algebra.graded_subspace import GradedSubspace, graded_span
from jordkit.algebra.grassmann import make_grassmann, monomial_sign
from jordkit.algebra.superalgebra import (
    Element,
    SuperAlgebra,
    associator,
    check_grading,
    direct_sum,
    is_unit,
    multiply,
    parity_parts,
)

__all__ = [
    "Element",
    "SuperAlgebra",
    "associator",
    "check_grading",
    "direct_sum",
    "is_unit",
    "multiply",
    "parity_parts",
    "GradedSubspace",
    "graded_span",
    "make_grassmann",
    "monomial_sign",
    "K3_FORM",
    "K3_LABELS",
    "K10_LABELS",
    "K10_V_GRAM",
    "TENSOR_LABELS",
    "SuperForm",
    "king_decomposition",
    "make_bilinear_jordan",
    "make_dt",
    "make_k3",
    "make_k10_broken",
    "make_k10_table",
    "make_k10_tensor",
    "make_matrix_algebra",
    "make_plus",
    "make_superform_algebra",
    "make_unit_algebra",
    "standard_k3",
    "standard_k10",
    "standard_k10_tensor",
    "table_from_rows",
]
