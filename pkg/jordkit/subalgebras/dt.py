"""
dt.py

Reads off the parameter t of a four-dimensional algebra of type D_t: two
orthogonal even idempotents E, F, both acting as ½ on a two-dimensional odd
part spanned by u, v with u·v = αE + βF. Since the naming of E and F is a
choice, the invariant is the unordered pair {β/α, α/β}.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from jordkit.algebra import Element, GradedSubspace, SuperAlgebra, is_unit
from jordkit.linalg import Matrix, solve
from jordkit.utils import format_scalar, rational_sqrt

logger = logging.getLogger(__name__)

DEGENERATE = "degenerate"


@dataclass(frozen=True)
class DtInvariant:
    """
    :ivar t_pair: The sorted pair (t, 1/t), or None if degenerate.
    :vartype t_pair: Optional[tuple[Fraction, Fraction]]
    """

    t_pair: Optional[tuple[Fraction, Fraction]]

    @classmethod
    def from_t(cls, t: Fraction) -> DtInvariant:
        t = Fraction(t)
        if not t:
            return cls(None)
        return cls(tuple(sorted((t, 1 / t))))

    @property
    def degenerate(self) -> bool:
        return self.t_pair is None

    def matches(self, t) -> bool:
        return not self.degenerate and Fraction(t) in self.t_pair

    def to_strings(self) -> Union[str, list[str]]:
        if self.t_pair is None:
            return DEGENERATE
        return [format_scalar(t) for t in self.t_pair]

    def __str__(self) -> str:
        if self.t_pair is None:
            return DEGENERATE
        return "{" + ", ".join(format_scalar(t) for t in self.t_pair) + "}"


def _solve_in(basis: list[Element], x: Element, what: str) -> tuple[Fraction, ...]:
    solution = solve(Matrix.from_columns([b.coords for b in basis]), x.coords)
    if solution is None:
        spanning = ", ".join(str(b) for b in basis)
        raise ValueError(f"{what} = {x} is not in the span of {spanning}")
    return solution


def _even_unit(even: list[Element]) -> Element:
    """The unit of a two-dimensional even part, solving λ·b_i = b_i linearly."""
    rows, rhs = [], []
    for b_i in even:
        products = [b_k * b_i for b_k in even]
        for position in range(len(b_i.coords)):
            rows.append([p.coords[position] for p in products])
            rhs.append(b_i.coords[position])
    lam = solve(Matrix.from_rows(rows), rhs)
    if lam is None:
        raise ValueError("even part has no unit; it is not spanned by two idempotents")
    return sum((c * b for c, b in zip(lam, even)), even[0].algebra.zero())


def orthogonal_idempotents(a: SuperAlgebra) -> tuple[Element, Element]:
    """
    The two orthogonal idempotents spanning the two-dimensional even part
    of `a`. With w outside F·1 and w² = c₁w + c₀1, they are
    (w − r₂1)/(r₁ − r₂) and its complement, r₁ and r₂ the roots of
    X² − c₁X − c₀.

    Raises:
        ValueError: If the even part is not two-dimensional, has no unit, or
            its idempotents are not rational.
    """
    if a.dim_even != 2:
        raise ValueError(f"even part of {a.name} has dimension {a.dim_even}, not 2")
    even = [a.basis_element(i) for i in a.even_indices]
    one = _even_unit(even)
    w = next(b for b in even if Matrix.from_columns([one.coords, b.coords]).rank() == 2)
    c1, c0 = _solve_in([w, one], w * w, "w²")
    root = rational_sqrt(c1 * c1 + 4 * c0)
    if root is None or not root:
        raise ValueError(
            f"even part of {a.name} is not split by rational idempotents"
            f" (discriminant {format_scalar(c1 * c1 + 4 * c0)})"
        )
    r1, r2 = (c1 + root) / 2, (c1 - root) / 2
    first = (w - r2 * one) / (r1 - r2)
    second = one - first
    if first * first != first or second * second != second:
        raise ValueError(f"idempotents of {a.name} are not idempotent")
    if not (first * second).is_zero():
        raise ValueError(f"idempotents of {a.name} are not orthogonal")
    return first, second


def dt_parameter(b: Union[GradedSubspace, SuperAlgebra]) -> DtInvariant:
    """
    The invariant pair {t, 1/t} of a subalgebra (or algebra) of type D_t.

    Raises:
        ValueError: Naming the failed precondition: dims other than (2, 2),
            even part not split by two orthogonal idempotents, or an
            idempotent not acting as ½ on the odd part.
    """
    a = b.restrict(name="D") if isinstance(b, GradedSubspace) else b
    if (a.dim_even, a.dim_odd) != (2, 2):
        raise ValueError(
            f"expected dims (2, 2) for a D_t algebra, got ({a.dim_even}, {a.dim_odd})"
        )
    first, second = orthogonal_idempotents(a)
    if not is_unit(a, first + second):
        raise ValueError("E + F is not the unit")
    odd = [a.basis_element(i) for i in a.odd_indices]
    half = Fraction(1, 2)
    for idempotent in (first, second):
        for u in odd:
            if idempotent * u != half * u or u * idempotent != half * u:
                raise ValueError(f"idempotent {idempotent} does not act as 1/2 on {u}")
    u, v = odd
    alpha, beta = _solve_in([first, second], u * v, "u·v")
    logger.debug("u·v = %s E + %s F", alpha, beta)
    if not alpha or not beta:
        return DtInvariant(None)
    return DtInvariant(tuple(sorted((beta / alpha, alpha / beta))))
