"""
witt.py

Isometries of the quadratic space V = span{a, b, c1, c2} of K10, whose
form Q is read off from v·w = Q(v, w)e.
"""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

from jordkit.algebra import K10_V_GRAM, Element
from jordkit.errors import ReflectionDegenerateError, VerificationError
from jordkit.linalg import Matrix, Vector

# Positions of a, b, c1, c2 among the K10 labels.
K10_V_INDICES = (1, 2, 3, 4)


def v_coordinates(x: Element, indices: Sequence[int] = K10_V_INDICES) -> Vector:
    """
    Coordinates of x against the basis of V.

    Raises:
        ValueError: If x has components outside V.
    """
    outside = [
        x.algebra.labels[k] for k, c in enumerate(x.coords) if c and k not in indices
    ]
    if outside:
        raise ValueError(f"{x} is not in V: components along {', '.join(outside)}")
    return tuple(x.coords[k] for k in indices)


def quadratic_norm(v: Sequence[Fraction], q: Matrix) -> Fraction:
    return sum((a * c for a, c in zip(v, q.apply(v))), Fraction(0))


def reflection(r: Sequence[Fraction], q: Matrix) -> Matrix:
    """
    σ_r(v) = v − 2·Q(v, r)/Q(r, r)·r.

    Raises:
        ReflectionDegenerateError: If r is isotropic.
    """
    norm = quadratic_norm(r, q)
    if not norm:
        raise ReflectionDegenerateError(f"cannot reflect in isotropic vector {r}")
    column = Matrix.from_columns([r])
    return Matrix.identity(len(r)) - (2 / norm) * (column @ column.transpose() @ q)


def witt_map(
    v1: Element,
    v2: Element,
    q: Matrix = K10_V_GRAM,
    indices: Optional[Sequence[int]] = None,
) -> Matrix:
    """
    An isometry g of (V, Q) with g(v1) = v2, a product of at most two
    reflections: σ_{v1−v2} when v1 − v2 is anisotropic, otherwise
    σ_{v2}∘σ_{v1+v2}.

    Args:
        v1 (Element): Source vector, in V.
        v2 (Element): Target vector, in V.
        q (Matrix): Gram matrix of Q on V.
        indices (Optional[Sequence[int]]): Positions of the basis of V in
            the algebra; defaults to a, b, c1, c2 of K10.

    Returns:
        Matrix: g on V, columns are images of the basis of V.

    Raises:
        ValueError: If v1 or v2 leaves V, or their norms differ or vanish.
        ReflectionDegenerateError: If both v1 − v2 and v1 + v2 are isotropic.
    """
    indices = K10_V_INDICES if indices is None else indices
    s, t = v_coordinates(v1, indices), v_coordinates(v2, indices)
    norm_s, norm_t = quadratic_norm(s, q), quadratic_norm(t, q)
    if norm_s != norm_t:
        raise ValueError(f"norms differ: Q({v1}) = {norm_s}, Q({v2}) = {norm_t}")
    if not norm_s:
        raise ValueError(f"{v1} is isotropic")
    if s == t:
        g = Matrix.identity(len(s))
    else:
        difference = tuple(a - c for a, c in zip(s, t))
        total = tuple(a + c for a, c in zip(s, t))
        if quadratic_norm(difference, q):
            g = reflection(difference, q)
        elif quadratic_norm(total, q):
            g = reflection(t, q) @ reflection(total, q)
        else:
            raise ReflectionDegenerateError(
                f"both {v1} - {v2} and {v1} + {v2} are isotropic"
            )
    if g.apply(s) != t or g.transpose() @ q @ g != q:
        raise VerificationError("witt-map", f"reflection product fails on {v1}")
    return g
