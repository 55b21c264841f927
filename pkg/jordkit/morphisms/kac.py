"""
kac.py

Maps attached to K10: the isomorphism from the multiplication table onto the
tensor model F·1 ⊕ K3⊗K3, the swap δ, lifts of symplectic maps to K3, the
homomorphism Φ from Sp(W) ≀ C2 into Aut(K10), restriction Ψ to V = W⊗W, and
the lift back from O(V, b).
"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Optional

from jordkit.algebra import SuperAlgebra, standard_k3, standard_k10, standard_k10_tensor
from jordkit.algebra.catalog import TENSOR_FACTORS
from jordkit.errors import VerificationError
from jordkit.linalg import Matrix
from jordkit.morphisms.morphism import (
    Morphism,
    is_automorphism,
    is_homomorphism,
    is_isomorphism,
)
from jordkit.morphisms.orthogonal import OrthogonalMap, factor_orthogonal
from jordkit.morphisms.wreath import WreathElement

logger = logging.getLogger(__name__)

# Images of the K10 basis in the tensor model.
ISO_IMAGES = {
    "e": "3/2*1 - 2*ee",
    "a": "-4*xx - yy",
    "b": "-4*xx + yy",
    "c1": "2*xy",
    "c2": "-2*yx",
    "f": "-1/2*1 + 2*ee",
    "p1": "4*xe - 2*ey",
    "p2": "-4*ex - 2*ye",
    "q1": "4*xe + 2*ey",
    "q2": "-4*ex + 2*ye",
}

# Tensor-model coordinates of V = W⊗W: xx, xy, yx, yy.
V_INDICES = (2, 3, 4, 5)


def _verified(claim: str, m: Morphism) -> Morphism:
    report = is_homomorphism(m)
    if not report.passed:
        raise VerificationError(claim, report.summary())
    return m


def benkart_elduque_iso(
    k10: Optional[SuperAlgebra] = None, tensor: Optional[SuperAlgebra] = None
) -> Morphism:
    """
    The isomorphism K10 → F·1 ⊕ K3⊗K3 given by ISO_IMAGES, verified on
    every basis pair.

    Raises:
        VerificationError: If the map is not an isomorphism.
    """
    k10 = k10 or standard_k10()
    tensor = tensor or standard_k10_tensor()
    images = [tensor.parse_element(ISO_IMAGES[label]) for label in k10.labels]
    m = Morphism.from_images(k10, tensor, images)
    if not is_isomorphism(m):
        raise VerificationError("tensor-isomorphism", is_homomorphism(m).summary())
    logger.info("verified isomorphism %s -> %s", k10.name, tensor.name)
    return m


@lru_cache(maxsize=None)
def standard_iso() -> Morphism:
    return benkart_elduque_iso()


def swap_automorphism(tensor: Optional[SuperAlgebra] = None) -> Morphism:
    """δ: 1 ↦ 1, a⊗b ↦ (-1)^{āb̄} b⊗a."""
    tensor = tensor or standard_k10_tensor()
    k3 = standard_k3()
    position = {factors: index + 1 for index, factors in enumerate(TENSOR_FACTORS)}
    columns = [[1] + [0] * 9]
    for a, b in TENSOR_FACTORS:
        column = [0] * 10
        column[position[(b, a)]] = -1 if k3.parity(a) and k3.parity(b) else 1
        columns.append(column)
    swap = Morphism(tensor, tensor, Matrix.from_columns(columns))
    return _verified("swap-automorphism", swap)


def lift_sp_to_k3(f: Matrix, k3: Optional[SuperAlgebra] = None) -> Morphism:
    """
    The automorphism f̃ of K3 fixing e and acting by f on span{x, y}.

    Raises:
        ValueError: If det(f) != 1.
    """
    if f.shape != (2, 2):
        raise ValueError(f"Expected a 2x2 matrix, got shape {f.shape}")
    if f.determinant() != 1:
        raise ValueError(f"Not symplectic: det = {f.determinant()}")
    k3 = k3 or standard_k3()
    matrix = Matrix.from_rows(
        [[1, 0, 0], [0, f[0, 0], f[0, 1]], [0, f[1, 0], f[1, 1]]]
    )
    return _verified("symplectic-lift", Morphism(k3, k3, matrix))


def tensor_action(
    f: Matrix, g: Matrix, tensor: Optional[SuperAlgebra] = None
) -> Morphism:
    """Φ_(f,g): 1 ↦ 1, a⊗b ↦ f̃(a)⊗g̃(b)."""
    tensor = tensor or standard_k10_tensor()
    left = lift_sp_to_k3(f).matrix
    right = lift_sp_to_k3(g).matrix
    position = {factors: index + 1 for index, factors in enumerate(TENSOR_FACTORS)}
    columns = [[1] + [0] * 9]
    for a, b in TENSOR_FACTORS:
        column = [0] * 10
        for k in range(3):
            for m in range(3):
                c = left[k, a] * right[m, b]
                if c:
                    column[position[(k, m)]] += c
        columns.append(column)
    return Morphism(tensor, tensor, Matrix.from_columns(columns))


def phi(w: WreathElement, tensor: Optional[SuperAlgebra] = None) -> Morphism:
    """Φ(f, g, swap) = Φ_(f,g) ∘ δ^swap, an automorphism of the tensor model."""
    m = tensor_action(w.f, w.g, tensor)
    if w.swap:
        m = m.compose(swap_automorphism(m.source))
    return m


def psi(m: Morphism) -> OrthogonalMap:
    """
    Restriction of an automorphism of the tensor model to V = W⊗W.

    Raises:
        ValueError: If V is not invariant under m.
        NotOrthogonal: If the restriction does not preserve b.
    """
    if not m.is_endomorphism or m.source.dim != 10:
        raise ValueError(f"psi needs an endomorphism of the tensor model, got {m!r}")
    outside = [i for i in range(10) if i not in V_INDICES]
    for j in V_INDICES:
        if any(m.matrix[i, j] for i in outside):
            raise ValueError(
                f"V is not invariant: image of {m.source.labels[j]} leaves V"
            )
    return OrthogonalMap(m.matrix.submatrix(V_INDICES, V_INDICES))


def lift_orthogonal_to_aut(
    m: OrthogonalMap, tensor: Optional[SuperAlgebra] = None
) -> Morphism:
    """
    An automorphism of the tensor model restricting to m on V, namely
    phi(factor_orthogonal(m)).

    Raises:
        NonSquareScalar: Propagated from factor_orthogonal.
    """
    lifted = phi(factor_orthogonal(m), tensor)
    if not is_automorphism(lifted):
        raise VerificationError("orthogonal-lift", "lift is not an automorphism")
    return lifted
