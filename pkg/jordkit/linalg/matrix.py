from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import Optional

from jordkit.errors import DimensionMismatchError, SingularMatrixError
from jordkit.utils import ScalarLike, format_scalar, to_scalar

Vector = tuple[Fraction, ...]


def to_vector(values: Iterable[ScalarLike]) -> Vector:
    """Converts an iterable of scalar-likes into an exact coordinate tuple."""
    return tuple(to_scalar(value) for value in values)


class Matrix:
    """
    A dense, immutable matrix of exact rationals.

    :ivar rows: Number of rows.
    :vartype rows: int
    :ivar cols: Number of columns.
    :vartype cols: int
    :ivar entries: Row-major entries, ``rows * cols`` of them.
    :vartype entries: tuple[Fraction, ...]
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[ScalarLike]):
        entries = to_vector(entries)
        if rows < 0 or cols < 0:
            raise ValueError(f"Negative matrix shape ({rows}, {cols})")
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"Expected {rows * cols} entries for a {rows}x{cols} matrix,"
                f" got {len(entries)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    # Construction

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[ScalarLike]], cols: Optional[int] = None
    ) -> Matrix:
        """
        Builds a matrix from a list of rows.

        Args:
            rows (Sequence[Sequence[ScalarLike]]): The rows.
            cols (Optional[int]): Column count; required only when `rows` is
                empty.
        """
        if not rows:
            return cls(0, cols or 0, ())
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatchError("Every row must have the same length")
        return cls(len(rows), width, (value for row in rows for value in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]]) -> Matrix:
        """Builds a matrix whose j-th column is ``columns[j]``."""
        return cls.from_rows(columns).transpose()

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, (1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike]) -> Matrix:
        n = len(values)
        return cls(
            n, n, (values[i] if i == j else 0 for i in range(n) for j in range(n))
        )

    # Access

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]):
        return Matrix(
            len(row_indices),
            len(col_indices),
            (self[i, j] for i in row_indices for j in col_indices),
        )

    # Arithmetic

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            (self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __add__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols, map(sum, zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._require_same_shape(other)
        return Matrix(
            self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, (-a for a in self.entries))

    def scale(self, factor: ScalarLike) -> Matrix:
        factor = to_scalar(factor)
        return Matrix(self.rows, self.cols, (factor * a for a in self.entries))

    def __rmul__(self, factor: ScalarLike) -> Matrix:
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_columns = [other.column(j) for j in range(other.cols)]
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for column in other_columns:
                entries.append(sum(a * b for a, b in zip(row, column) if a and b))
        return Matrix(self.rows, other.cols, entries)

    def apply(self, vector: Sequence[ScalarLike]) -> Vector:
        """Returns the matrix-vector product ``self · vector``."""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} does not fit {self.cols} columns"
            )
        vector = to_vector(vector)
        support = [(j, value) for j, value in enumerate(vector) if value]
        return tuple(
            sum((self.entries[i * self.cols + j] * value for j, value in support),
                Fraction(0))
            for i in range(self.rows)
        )

    def kron(self, other: Matrix) -> Matrix:
        """The Kronecker product, with ``self`` indexing the outer blocks."""
        rows, cols = self.rows * other.rows, self.cols * other.cols
        entries = []
        for i in range(self.rows):
            for k in range(other.rows):
                for j in range(self.cols):
                    a = self[i, j]
                    for m in range(other.cols):
                        entries.append(a * other[k, m])
        return Matrix(rows, cols, entries)

    def determinant(self) -> Fraction:
        """Exact determinant by Gaussian elimination."""
        if not self.is_square:
            raise DimensionMismatchError(f"Determinant of non-square {self.shape}")
        work = [list(self.row(i)) for i in range(self.rows)]
        det = Fraction(1)
        n = self.rows
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det *= work[col][col]
            for r in range(col + 1, n):
                factor = work[r][col] / work[col][col]
                if factor:
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return det

    def rank(self) -> int:
        return len(rref(self)[1])

    def is_zero(self) -> bool:
        return not any(self.entries)

    # Comparison and display

    def _require_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shape {self.shape} != {other.shape}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def to_strings(self) -> list[list[str]]:
        """Rows of "p/q" strings, the file-format spelling."""
        return [[format_scalar(a) for a in self.row(i)] for i in range(self.rows)]

    def __repr__(self) -> str:
        return f"Matrix.from_rows({self.to_strings()})"

    def __str__(self) -> str:
        cells = self.to_strings()
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


#  Row reduction


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """
    Reduces `rows` in place to reduced row-echelon form.

    Returns:
        list[int]: The pivot columns, in order.
    """
    pivots = []
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        found = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        lead = rows[pivot_row][col]
        if lead != 1:
            rows[pivot_row] = [a / lead for a in rows[pivot_row]]
        pivot = rows[pivot_row]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], pivot)]
        pivots.append(col)
        pivot_row += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """
    Reduced row-echelon form of `m` and its pivot columns.

    The returned matrix has the shape of `m`; zero rows collect at the bottom.

    Args:
        m (Matrix): The matrix to reduce.

    Returns:
        tuple[Matrix, list[int]]: The reduced matrix and the pivot columns.
    """
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = _rref_rows(rows, m.cols)
    return Matrix(m.rows, m.cols, (a for row in rows for a in row)), pivots


def solve(a: Matrix, b: Sequence[ScalarLike]) -> Optional[Vector]:
    """
    Solves ``a · x = b`` exactly.

    Free variables are set to zero, so the answer is the canonical solution
    supported on pivot columns.

    Args:
        a (Matrix): The coefficient matrix.
        b (Sequence[ScalarLike]): The right-hand side, one entry per row of `a`.

    Returns:
        Optional[Vector]: A solution, or None if the system is inconsistent.
    """
    if len(b) != a.rows:
        raise DimensionMismatchError(
            f"Right-hand side has length {len(b)}, matrix has {a.rows} rows"
        )
    b = to_vector(b)
    rows = [list(a.row(i)) + [b[i]] for i in range(a.rows)]
    pivots = _rref_rows(rows, a.cols + 1)
    if pivots and pivots[-1] == a.cols:
        return None
    solution = [Fraction(0)] * a.cols
    for r, col in enumerate(pivots):
        solution[col] = rows[r][a.cols]
    return tuple(solution)


def invert(m: Matrix) -> Matrix:
    """
    Exact inverse of a square matrix.

    Raises:
        SingularMatrixError: If `m` is not invertible.
    """
    if not m.is_square:
        raise DimensionMismatchError(f"Cannot invert non-square {m.shape} matrix")
    n = m.rows
    rows = [
        list(m.row(i)) + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    pivots = _rref_rows(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError(f"Matrix is singular (rank < {n}):\n{m}")
    return Matrix(n, n, (a for row in rows for a in row[n:]))


def nullspace(m: Matrix) -> list[Vector]:
    """
    A basis of ``{x : m · x = 0}``, one vector per free column, each with a 1
    in its free column.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * m.cols
        vector[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vector[col] = -reduced[r, free]
        basis.append(tuple(vector))
    return basis
