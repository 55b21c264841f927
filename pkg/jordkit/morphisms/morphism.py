from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Union

from jordkit.algebra import Element, GradedSubspace, SuperAlgebra
from jordkit.errors import AlgebraMismatchError, DimensionMismatchError
from jordkit.linalg import Matrix, invert
from jordkit.report import IdentityReport, Witness
from jordkit.utils import ScalarLike, parallel_map

logger = logging.getLogger(__name__)


class Morphism:
    """
    A grading-preserving linear map between two superalgebras.

    The matrix has one column per source basis vector, holding the
    coordinates of its image in the target.

    :ivar source: The domain.
    :vartype source: SuperAlgebra
    :ivar target: The codomain.
    :vartype target: SuperAlgebra
    :ivar matrix: target.dim x source.dim matrix, columns are images.
    :vartype matrix: Matrix
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: SuperAlgebra, target: SuperAlgebra, matrix: Matrix):
        if matrix.shape != (target.dim, source.dim):
            raise DimensionMismatchError(
                f"Matrix of shape {matrix.shape} cannot map {source.name}"
                f" (dim {source.dim}) to {target.name} (dim {target.dim})"
            )
        for j in range(source.dim):
            parity = source.parity(j)
            for i in range(target.dim):
                if matrix[i, j] and target.parity(i) != parity:
                    raise ValueError(
                        f"Image of {source.labels[j]} has a component on"
                        f" {target.labels[i]} of the other parity"
                    )
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    @classmethod
    def from_images(
        cls,
        source: SuperAlgebra,
        target: SuperAlgebra,
        images: Sequence[Union[Element, Sequence[ScalarLike]]],
    ) -> Morphism:
        """Builds a morphism from the images of the source basis, in order."""
        if len(images) != source.dim:
            raise DimensionMismatchError(
                f"{len(images)} images given for {source.name}"
                f" of dimension {source.dim}"
            )
        columns = []
        for image in images:
            if isinstance(image, Element):
                if image.algebra is not target:
                    raise AlgebraMismatchError(
                        f"Image lives in {image.algebra.name}, not {target.name}"
                    )
                image = image.coords
            if len(image) != target.dim:
                raise DimensionMismatchError(
                    f"Image of length {len(image)} in {target.name} of dimension"
                    f" {target.dim}"
                )
            columns.append(image)
        return cls(source, target, Matrix.from_columns(columns))

    @classmethod
    def identity(cls, a: SuperAlgebra) -> Morphism:
        return cls(a, a, Matrix.identity(a.dim))

    @property
    def is_endomorphism(self) -> bool:
        return self.source is self.target

    def __call__(self, x: Element) -> Element:
        if x.algebra is not self.source:
            raise AlgebraMismatchError(
                f"Element of {x.algebra.name} given to a map from {self.source.name}"
            )
        return self.target.element(self.matrix.apply(x.coords))

    def image(self, index: int) -> Element:
        return self.target.element(self.matrix.column(index))

    def compose(self, other: Morphism) -> Morphism:
        """self ∘ other: apply `other` first."""
        if other.target is not self.source:
            raise AlgebraMismatchError(
                f"Cannot compose a map from {self.source.name} after a map into"
                f" {other.target.name}"
            )
        return Morphism(other.source, self.target, self.matrix @ other.matrix)

    def __matmul__(self, other: Morphism) -> Morphism:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.compose(other)

    def inverse(self) -> Morphism:
        """
        Raises:
            SingularMatrixError: If the matrix is not invertible.
        """
        return Morphism(self.target, self.source, invert(self.matrix))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source is other.source
            and self.target is other.target
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.matrix))

    def __repr__(self) -> str:
        return f"Morphism({self.source.name} -> {self.target.name})"


def is_homomorphism(m: Morphism, jobs: int = 1) -> IdentityReport:
    """
    Checks m(e_i · e_j) = m(e_i) · m(e_j) on all source basis pairs. Witnesses
    carry the difference, in the target.
    """
    source, target = m.source, m.target
    images = [m.matrix.column(j) for j in range(source.dim)]

    def row(i: int) -> list[Witness]:
        found = []
        for j in range(source.dim):
            mapped = m.matrix.apply(source.product_coords(i, j))
            product = target.multiply_coords(images[i], images[j])
            defect = tuple(p - q for p, q in zip(mapped, product))
            if any(defect):
                found.append(Witness((i, j), target.element(defect)))
        return found

    chunks = parallel_map(row, range(source.dim), jobs)
    witnesses = [w for chunk in chunks for w in chunk]
    logger.debug("homomorphism %r: %d pairs", m, source.dim**2)
    return IdentityReport.from_witnesses("homomorphism", witnesses, source.dim**2)


def is_isomorphism(m: Morphism) -> bool:
    """True if m is a homomorphism with an invertible matrix."""
    if not m.matrix.is_square or m.matrix.determinant() == 0:
        return False
    return is_homomorphism(m).passed


def is_automorphism(m: Morphism) -> bool:
    return m.is_endomorphism and is_isomorphism(m)


def grading_automorphism(a: SuperAlgebra) -> Morphism:
    """τ(z) = (-1)^{z̄} z."""
    return Morphism(a, a, Matrix.diagonal([1 - 2 * a.parity(i) for i in range(a.dim)]))


def block_map(a: SuperAlgebra, action: Matrix, indices: Sequence[int]) -> Morphism:
    """
    The endomorphism of `a` acting by `action` on span{e_i : i in indices}
    and fixing every other basis vector. Symplectic maps on the odd part of
    D_t or K3, and orthogonal ⊕ symplectic maps of a superform algebra, are
    of this kind.
    """
    indices = list(indices)
    if action.shape != (len(indices), len(indices)):
        raise DimensionMismatchError(
            f"Action of shape {action.shape} on {len(indices)} basis vectors"
        )
    columns = [list(a.basis_element(j).coords) for j in range(a.dim)]
    for position, j in enumerate(indices):
        column = [0] * a.dim
        for row, i in enumerate(indices):
            column[i] = action[row, position]
        columns[j] = column
    return Morphism(a, a, Matrix.from_columns(columns))


def conjugate(m: Morphism, iso: Morphism) -> Morphism:
    """
    Transports the endomorphism m of iso.source to iso ∘ m ∘ iso⁻¹ on
    iso.target.
    """
    if not m.is_endomorphism or m.source is not iso.source:
        raise AlgebraMismatchError(
            f"Cannot transport {m!r} along {iso!r}: need an endomorphism of"
            f" {iso.source.name}"
        )
    return iso.compose(m).compose(iso.inverse())


def image_subspace(m: Morphism, s: GradedSubspace) -> GradedSubspace:
    """The graded subspace m(s) of the target."""
    if s.algebra is not m.source:
        raise AlgebraMismatchError(
            f"Subspace of {s.algebra.name} mapped from {m.source.name}"
        )
    return GradedSubspace.from_elements(m.target, (m(x) for x in s.basis()))
