"""
orthogonal.py

The orthogonal group of V = W⊗W with b(s⊗t, s'⊗t') = (s|s')(t|t'), and the
constructive surjection from Sp(W) ≀ C2 onto it.

V is coordinatized on x⊗x, x⊗y, y⊗x, y⊗y; a vector of V is also read as the
2x2 coefficient matrix whose rows are indexed by the first factor.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from jordkit.errors import NotIsotropicError, NotOrthogonal, VerificationError
from jordkit.linalg import Matrix, Vector, invert, to_vector
from jordkit.morphisms.wreath import WreathElement, wreath_compose, wreath_invert
from jordkit.utils import ScalarLike, require_sqrt

logger = logging.getLogger(__name__)

# The symplectic form on W in the basis x, y: (x|y) = 1.
W_FORM = Matrix.from_rows([[0, 1], [-1, 0]])

V_GRAM = W_FORM.kron(W_FORM)

# ε̂: s⊗t ↦ -t⊗s.
SWAP_HAT = Matrix.from_rows(
    [[-1, 0, 0, 0], [0, 0, -1, 0], [0, -1, 0, 0], [0, 0, 0, -1]]
)


class OrthogonalMap:
    """
    A 4x4 matrix on V preserving b, i.e. mᵀ·G·m = G for the Gram matrix G.

    :ivar matrix: Columns are the images of x⊗x, x⊗y, y⊗x, y⊗y.
    :vartype matrix: Matrix
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: Matrix):
        if matrix.shape != (4, 4):
            raise NotOrthogonal(f"Expected a 4x4 matrix on V, got shape {matrix.shape}")
        if matrix.transpose() @ V_GRAM @ matrix != V_GRAM:
            raise NotOrthogonal(f"Matrix does not preserve b:\n{matrix}")
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    @classmethod
    def identity(cls) -> OrthogonalMap:
        return cls(Matrix.identity(4))

    def __call__(self, v: Sequence[ScalarLike]) -> Vector:
        return self.matrix.apply(v)

    def __matmul__(self, other: OrthogonalMap) -> OrthogonalMap:
        if not isinstance(other, OrthogonalMap):
            return NotImplemented
        return OrthogonalMap(self.matrix @ other.matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrthogonalMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"OrthogonalMap({self.matrix!r})"


def form_b(v: Sequence[ScalarLike], w: Sequence[ScalarLike]) -> Fraction:
    v, w = to_vector(v), to_vector(w)
    return sum((a * c for a, c in zip(v, V_GRAM.apply(w))), Fraction(0))


def psi_tilde(w: WreathElement) -> OrthogonalMap:
    """(f, g, swap) ↦ (f⊗g)∘ε̂^swap."""
    matrix = w.f.kron(w.g)
    if w.swap:
        matrix = matrix @ SWAP_HAT
    return OrthogonalMap(matrix)


def factor_isotropic(v: Sequence[ScalarLike]) -> tuple[Vector, Vector]:
    """
    Writes an isotropic vector of V as a pure tensor s⊗t, with the first
    nonzero coordinate of s equal to 1.

    Raises:
        NotIsotropicError: If v = 0 or its coefficient matrix has rank 2.
    """
    v = to_vector(v)
    if len(v) != 4:
        raise NotIsotropicError(
            f"Expected a vector of V (length 4), got length {len(v)}"
        )
    coefficients = Matrix(2, 2, v)
    if coefficients.is_zero():
        raise NotIsotropicError("The zero vector is not a pure tensor")
    if coefficients.determinant() != 0:
        raise NotIsotropicError(
            f"{v} is not isotropic: b(v, v) = {2 * coefficients.determinant()}"
        )
    column = next(
        coefficients.column(j) for j in range(2) if any(coefficients.column(j))
    )
    pivot = next(i for i in range(2) if column[i])
    s = tuple(a / column[pivot] for a in column)
    t = coefficients.row(pivot)
    return s, t


def _completing_inverse(s: Vector) -> Matrix:
    """A determinant-one f with f(s) = x, namely [s | w]⁻¹."""
    if s[0]:
        w = (Fraction(0), 1 / s[0])
    else:
        w = (-1 / s[1], Fraction(0))
    return invert(Matrix.from_columns([s, w]))


def factor_orthogonal(m: OrthogonalMap) -> WreathElement:
    """
    Finds w with psi_tilde(w) = m.

    The map is reduced step by step: move m(x⊗x) back to x⊗x, then m(y⊗y)
    back to y⊗y by maps fixing x, then undo a transposition if x⊗y is sent
    onto the y⊗x line. What remains is diag(γ, 1/γ) on the middle
    coordinates, which is the image of (diag(μ, 1/μ), diag(1/μ, μ)) for
    μ² = γ.

    Returns:
        WreathElement: Canonical representative, first nonzero entry of f
            positive.

    Raises:
        NotOrthogonal: If m does not preserve b.
        NonSquareScalar: If γ has no rational square root.
    """
    if not isinstance(m, OrthogonalMap):
        m = OrthogonalMap(m)
    matrix = m.matrix

    s, t = factor_isotropic(matrix.column(0))
    first = WreathElement(_completing_inverse(s), _completing_inverse(t))
    matrix = psi_tilde(first).matrix @ matrix

    s, t = factor_isotropic(matrix.column(3))
    alpha = s[1]
    f2 = Matrix.from_rows([[1, s[0] / alpha], [0, s[1] / alpha]])
    g2 = Matrix.from_rows([[1, alpha * t[0]], [0, alpha * t[1]]])
    second = WreathElement(f2, g2)
    matrix = invert(psi_tilde(second).matrix) @ matrix

    word = wreath_compose(wreath_invert(first), second)
    middle = matrix.column(1)
    if not middle[1]:
        transpose = WreathElement(-Matrix.identity(2), Matrix.identity(2), True)
        matrix = psi_tilde(transpose).matrix @ matrix
        word = wreath_compose(word, transpose)

    gamma = matrix[1, 1]
    mu = require_sqrt(gamma)
    third = WreathElement(
        Matrix.diagonal([mu, 1 / mu]), Matrix.diagonal([1 / mu, mu])
    )
    if psi_tilde(third).matrix != matrix:
        raise VerificationError(
            "factor-orthogonal", f"reduced map is not diagonal:\n{matrix}"
        )
    word = wreath_compose(word, third).canonical()
    if psi_tilde(word) != m:
        raise VerificationError(
            "factor-orthogonal", "factorization does not reproduce m"
        )
    logger.debug("factored orthogonal map, gamma = %s", gamma)
    return word
