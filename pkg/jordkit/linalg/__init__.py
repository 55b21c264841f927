from jordkit.linalg.matrix import (
    Matrix,
    Vector,
    invert,
    nullspace,
    rref,
    solve,
    to_vector,
)
from jordkit.linalg.subspace import EchelonBuilder, Subspace, solve_in_span, span

__all__ = [
    "EchelonBuilder",
    "Matrix",
    "Subspace",
    "Vector",
    "invert",
    "nullspace",
    "rref",
    "solve",
    "solve_in_span",
    "span",
    "to_vector",
]
