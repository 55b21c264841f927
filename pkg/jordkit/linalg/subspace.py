from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional

from jordkit.errors import DimensionMismatchError
from jordkit.linalg.matrix import Matrix, Vector, _rref_rows, rref, solve, to_vector
from jordkit.utils import ScalarLike


class EchelonBuilder:
    """
    Incrementally maintained reduced row-echelon basis.

    Used by the fixed-point closures, where vectors arrive one at a time and
    each must be tested for membership before it is adjoined.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: list[list[Fraction]] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Fraction]) -> list[Fraction]:
        """Returns the remainder of `vector` after elimination by the basis."""
        remainder = list(vector)
        for row, pivot in zip(self._rows, self._pivots):
            factor = remainder[pivot]
            if factor:
                remainder = [a - factor * b for a, b in zip(remainder, row)]
        return remainder

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return not any(self.reduce(vector))

    def insert(self, vector: Sequence[ScalarLike]) -> bool:
        """
        Adjoins `vector` to the span.

        Returns:
            bool: True if the dimension grew.
        """
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} in ambient dimension"
                f" {self.ambient_dim}"
            )
        remainder = self.reduce(to_vector(vector))
        pivot = next((j for j, a in enumerate(remainder) if a), None)
        if pivot is None:
            return False
        lead = remainder[pivot]
        remainder = [a / lead for a in remainder]
        for index, row in enumerate(self._rows):
            factor = row[pivot]
            if factor:
                self._rows[index] = [a - factor * b for a, b in zip(row, remainder)]
        position = next(
            (i for i, p in enumerate(self._pivots) if p > pivot), len(self._pivots)
        )
        self._rows.insert(position, remainder)
        self._pivots.insert(position, pivot)
        return True

    def to_subspace(self) -> Subspace:
        return Subspace._from_reduced(
            self.ambient_dim, [tuple(row) for row in self._rows]
        )


class Subspace:
    """
    A subspace of F^n, stored canonically by its reduced row-echelon basis.

    Two subspaces are equal exactly when their bases are equal.

    :ivar ambient_dim: Dimension n of the ambient coordinate space.
    :vartype ambient_dim: int
    :ivar basis: Reduced row-echelon matrix with no zero rows.
    :vartype basis: Matrix
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence[ScalarLike]] = ()):
        rows = [list(to_vector(v)) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise DimensionMismatchError(
                    f"Vector of length {len(row)} in ambient dimension {ambient_dim}"
                )
        pivots = _rref_rows(rows, ambient_dim)
        rows = rows[: len(pivots)]
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(
            self,
            "basis",
            Matrix(len(rows), ambient_dim, (a for row in rows for a in row)),
        )
        object.__setattr__(self, "pivots", tuple(pivots))

    @classmethod
    def _from_reduced(cls, ambient_dim: int, rows: Sequence[Vector]) -> Subspace:
        return cls(ambient_dim, rows)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.identity(ambient_dim).row_list())

    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> list[Vector]:
        return self.basis.row_list()

    def _require_same_ambient(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"Ambient dimensions differ: {self.ambient_dim} != {other.ambient_dim}"
            )

    def contains(self, vector: Sequence[ScalarLike]) -> bool:
        """Decides exactly whether `vector` lies in the subspace."""
        if len(vector) != self.ambient_dim:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} in ambient dimension"
                f" {self.ambient_dim}"
            )
        remainder = list(to_vector(vector))
        for row, pivot in zip(self.vectors(), self.pivots):
            factor = remainder[pivot]
            if factor:
                remainder = [a - factor * b for a, b in zip(remainder, row)]
        return not any(remainder)

    def contains_subspace(self, other: Subspace) -> bool:
        self._require_same_ambient(other)
        return all(self.contains(v) for v in other.vectors())

    def coordinates(self, vector: Sequence[ScalarLike]) -> Optional[Vector]:
        """
        Coefficients of `vector` against the echelon basis, or None if the
        vector is outside the subspace.
        """
        if not self.contains(vector):
            return None
        vector = to_vector(vector)
        # For an RREF basis the coefficient of row r is the entry at its pivot.
        return tuple(vector[p] for p in self.pivots)

    def sum(self, other: Subspace) -> Subspace:
        self._require_same_ambient(other)
        return Subspace(self.ambient_dim, self.vectors() + other.vectors())

    def intersect(self, other: Subspace) -> Subspace:
        """
        Intersection by the Zassenhaus algorithm: row-reduce
        [[U, U], [W, 0]]; the rows whose left half vanishes span U ∩ W in
        their right half.
        """
        self._require_same_ambient(other)
        n = self.ambient_dim
        zeros = (Fraction(0),) * n
        blocks = [v + v for v in self.vectors()] + [w + zeros for w in other.vectors()]
        if not blocks:
            return Subspace.zero(n)
        reduced, _ = rref(Matrix.from_rows(blocks))
        kept = []
        for row in reduced.row_list():
            if not any(row[:n]) and any(row[n:]):
                kept.append(row[n:])
        return Subspace(n, kept)

    def complement_coordinates(self) -> list[int]:
        """The non-pivot coordinates; their unit vectors span a complement."""
        pivot_set = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in pivot_set]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def span(ambient_dim: int, vectors: Iterable[Sequence[ScalarLike]]) -> Subspace:
    return Subspace(ambient_dim, vectors)


def solve_in_span(
    vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> Optional[Vector]:
    """Coefficients c with sum(c_i * vectors[i]) == target, or None."""
    if not vectors:
        return () if not any(target) else None
    return solve(Matrix.from_columns(vectors), target)
