from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional

from jordkit.algebra.superalgebra import Element, SuperAlgebra, multiply
from jordkit.errors import AlgebraMismatchError, DimensionMismatchError
from jordkit.linalg import Subspace
from jordkit.utils import format_scalar


class GradedSubspace:
    """
    A graded subspace S = S_0 ⊕ S_1 of a superalgebra.

    The even and odd parts are stored as Subspaces of the even and odd
    coordinate blocks, each with its reduced echelon basis, so equality of
    graded subspaces is equality of those bases.

    :ivar algebra: The ambient algebra.
    :vartype algebra: SuperAlgebra
    :ivar even: Subspace of F^dim_even.
    :vartype even: Subspace
    :ivar odd: Subspace of F^dim_odd.
    :vartype odd: Subspace
    """

    __slots__ = ("algebra", "even", "odd")

    def __init__(self, algebra: SuperAlgebra, even: Subspace, odd: Subspace):
        if even.ambient_dim != algebra.dim_even or odd.ambient_dim != algebra.dim_odd:
            raise DimensionMismatchError(
                f"Blocks of ambient dims ({even.ambient_dim}, {odd.ambient_dim})"
                f" do not fit {algebra.name} with dims"
                f" ({algebra.dim_even}, {algebra.dim_odd})"
            )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "even", even)
        object.__setattr__(self, "odd", odd)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    @classmethod
    def from_elements(
        cls, algebra: SuperAlgebra, elements: Iterable[Element]
    ) -> GradedSubspace:
        """
        The least graded subspace containing `elements`, i.e. the span of
        their even and odd components.
        """
        dim_even = algebra.dim_even
        even_rows, odd_rows = [], []
        for element in elements:
            if element.algebra is not algebra:
                raise AlgebraMismatchError(
                    f"Element of {element.algebra.name} given for {algebra.name}"
                )
            even_rows.append(element.coords[:dim_even])
            odd_rows.append(element.coords[dim_even:])
        return cls(
            algebra,
            Subspace(dim_even, even_rows),
            Subspace(algebra.dim_odd, odd_rows),
        )

    @classmethod
    def from_labels(cls, algebra: SuperAlgebra, expressions: Iterable[str]):
        """Graded span of parsed expressions such as ``["e", "a+b", "p2+q2"]``."""
        elements = (algebra.parse_element(x) for x in expressions)
        return cls.from_elements(algebra, elements)

    @classmethod
    def zero(cls, algebra: SuperAlgebra) -> GradedSubspace:
        return cls(
            algebra, Subspace.zero(algebra.dim_even), Subspace.zero(algebra.dim_odd)
        )

    @classmethod
    def full(cls, algebra: SuperAlgebra) -> GradedSubspace:
        return cls(
            algebra, Subspace.full(algebra.dim_even), Subspace.full(algebra.dim_odd)
        )

    @classmethod
    def even_part(cls, algebra: SuperAlgebra) -> GradedSubspace:
        return cls(
            algebra, Subspace.full(algebra.dim_even), Subspace.zero(algebra.dim_odd)
        )

    # Shape

    @property
    def dims(self) -> tuple[int, int]:
        return self.even.dim, self.odd.dim

    @property
    def dim(self) -> int:
        return self.even.dim + self.odd.dim

    def is_proper(self) -> bool:
        return self.dim < self.algebra.dim

    def basis(self) -> list[Element]:
        """The echelon basis as algebra elements, even vectors first."""
        zeros_even = (Fraction(0),) * self.algebra.dim_even
        zeros_odd = (Fraction(0),) * self.algebra.dim_odd
        return [self.algebra.element(v + zeros_odd) for v in self.even.vectors()] + [
            self.algebra.element(zeros_even + v) for v in self.odd.vectors()
        ]

    # Membership and lattice operations

    def _require_same_algebra(self, other: GradedSubspace):
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(
                f"Subspaces of {self.algebra.name} and {other.algebra.name} combined"
            )

    def contains(self, x: Element) -> bool:
        if x.algebra is not self.algebra:
            raise AlgebraMismatchError(
                f"Element of {x.algebra.name} tested in a subspace of"
                f" {self.algebra.name}"
            )
        dim_even = self.algebra.dim_even
        return self.even.contains(x.coords[:dim_even]) and self.odd.contains(
            x.coords[dim_even:]
        )

    def contains_subspace(self, other: GradedSubspace) -> bool:
        self._require_same_algebra(other)
        return self.even.contains_subspace(other.even) and self.odd.contains_subspace(
            other.odd
        )

    def sum(self, other: GradedSubspace) -> GradedSubspace:
        self._require_same_algebra(other)
        return GradedSubspace(
            self.algebra, self.even.sum(other.even), self.odd.sum(other.odd)
        )

    def intersect(self, other: GradedSubspace) -> GradedSubspace:
        self._require_same_algebra(other)
        return GradedSubspace(
            self.algebra, self.even.intersect(other.even), self.odd.intersect(other.odd)
        )

    def coordinates(self, x: Element) -> Optional[tuple[Fraction, ...]]:
        """Coefficients of x against basis(), or None if x is outside."""
        dim_even = self.algebra.dim_even
        even = self.even.coordinates(x.coords[:dim_even])
        odd = self.odd.coordinates(x.coords[dim_even:])
        if even is None or odd is None:
            return None
        return even + odd

    def complement_basis(self) -> list[Element]:
        """Basis vectors e_k at the non-pivot coordinates: a graded complement."""
        dim_even = self.algebra.dim_even
        indices = self.even.complement_coordinates() + [
            dim_even + j for j in self.odd.complement_coordinates()
        ]
        return [self.algebra.basis_element(k) for k in indices]

    # Products

    def product_span(self, other: GradedSubspace) -> GradedSubspace:
        """The graded span of all products s·t with s in self, t in other."""
        self._require_same_algebra(other)
        left, right = self.basis(), other.basis()
        return GradedSubspace.from_elements(
            self.algebra, (multiply(x, y) for x in left for y in right)
        )

    def is_subalgebra(self) -> bool:
        """True if the subspace is closed under the product."""
        basis = self.basis()
        return all(self.contains(multiply(x, y)) for x in basis for y in basis)

    def is_ideal_of(self, parent: GradedSubspace) -> bool:
        """
        True if parent·self and self·parent lie in self.

        Raises:
            ValueError: If self is not contained in `parent`.
        """
        self._require_same_algebra(parent)
        if not parent.contains_subspace(self):
            raise ValueError("Ideal candidate is not contained in the parent subspace")
        inner, outer = self.basis(), parent.basis()
        return all(
            self.contains(multiply(x, y)) and self.contains(multiply(y, x))
            for x in inner
            for y in outer
        )

    def restrict(self, name: Optional[str] = None) -> SuperAlgebra:
        """
        The subalgebra as a SuperAlgebra in its own right, on the echelon
        basis of basis().

        Raises:
            ValueError: If the subspace is not closed under the product.
        """
        basis = self.basis()
        entries = []
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                product = multiply(x, y)
                coords = self.coordinates(product)
                if coords is None:
                    raise ValueError(
                        f"Product of basis vectors {i}, {j} leaves the subspace;"
                        " not a subalgebra"
                    )
                entries.extend((i, j, k, c) for k, c in enumerate(coords) if c)
        return SuperAlgebra(
            name or f"{self.algebra.name}|sub",
            self.even.dim,
            self.odd.dim,
            [_compact_label(x) for x in basis],
            entries,
            implicit_zero_rows=True,
        )

    # Comparison and display

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.even, self.odd))

    def rows(self) -> list[list[str]]:
        """Echelon basis rows in full algebra coordinates, as scalar strings."""
        return [x.to_strings() for x in self.basis()]

    def __str__(self) -> str:
        return "<" + ", ".join(str(x) for x in self.basis()) + ">"

    def __repr__(self) -> str:
        return f"GradedSubspace({self.algebra.name!r}, dims={self.dims}, {self})"


def _compact_label(x: Element) -> str:
    terms = []
    for label, c in zip(x.algebra.labels, x.coords):
        if not c:
            continue
        sign = "-" if c < 0 else ("+" if terms else "")
        magnitude = abs(c)
        coefficient = "" if magnitude == 1 else f"{format_scalar(magnitude)}*"
        terms.append(f"{sign}{coefficient}{label}")
    return "".join(terms) or "0"


def graded_span(algebra: SuperAlgebra, elements: Sequence[Element]) -> GradedSubspace:
    return GradedSubspace.from_elements(algebra, elements)
