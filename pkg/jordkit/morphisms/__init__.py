from jordkit.morphisms.kac import (
    ISO_IMAGES,
    V_INDICES,
    benkart_elduque_iso,
    lift_orthogonal_to_aut,
    lift_sp_to_k3,
    phi,
    psi,
    standard_iso,
    swap_automorphism,
    tensor_action,
)
from jordkit.morphisms.morphism import (
    Morphism,
    block_map,
    conjugate,
    grading_automorphism,
    image_subspace,
    is_automorphism,
    is_homomorphism,
    is_isomorphism,
)
from jordkit.morphisms.orthogonal import (
    SWAP_HAT,
    V_GRAM,
    OrthogonalMap,
    factor_isotropic,
    factor_orthogonal,
    form_b,
    psi_tilde,
)
from jordkit.morphisms.wreath import (
    WreathElement,
    random_symplectic,
    random_wreath,
    wreath_compose,
    wreath_invert,
)

__all__ = [
    "ISO_IMAGES",
    "V_INDICES",
    "benkart_elduque_iso",
    "lift_orthogonal_to_aut",
    "lift_sp_to_k3",
    "phi",
    "psi",
    "standard_iso",
    "swap_automorphism",
    "tensor_action",
    "Morphism",
    "block_map",
    "conjugate",
    "grading_automorphism",
    "image_subspace",
    "is_automorphism",
    "is_homomorphism",
    "is_isomorphism",
    "SWAP_HAT",
    "V_GRAM",
    "OrthogonalMap",
    "factor_isotropic",
    "factor_orthogonal",
    "form_b",
    "psi_tilde",
    "WreathElement",
    "random_symplectic",
    "random_wreath",
    "wreath_compose",
    "wreath_invert",
]
