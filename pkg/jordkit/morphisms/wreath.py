"""
wreath.py

The group G = Sp(W) ≀ C2 for dim W = 2. An element (f, g, swap) stands for
(f, g)·ε^swap, and the relation (f, g)ε = ε(g, f) gives the product.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from jordkit.linalg import Matrix, invert
from jordkit.utils import SeededSampler, height


def _require_symplectic(name: str, m: Matrix):
    if m.shape != (2, 2):
        raise ValueError(f"{name} must be 2x2, got shape {m.shape}")
    if m.determinant() != 1:
        raise ValueError(f"{name} must have determinant 1, got {m.determinant()}")


@dataclass(frozen=True)
class WreathElement:
    """
    An element (f, g)·ε^swap of Sp(W) ≀ C2.

    :ivar f: First symplectic factor, columns are images of x, y.
    :vartype f: Matrix
    :ivar g: Second symplectic factor.
    :vartype g: Matrix
    :ivar swap: Whether the ε component is present.
    :vartype swap: bool
    """

    f: Matrix
    g: Matrix
    swap: bool = False

    def __post_init__(self):
        _require_symplectic("f", self.f)
        _require_symplectic("g", self.g)

    @classmethod
    def identity(cls) -> WreathElement:
        return cls(Matrix.identity(2), Matrix.identity(2), False)

    @classmethod
    def from_entries(cls, f: str, g: str, swap: bool = False) -> WreathElement:
        """Parses row-major ``"a,b,c,d"`` strings for f and g."""
        return cls(_parse_2x2(f), _parse_2x2(g), swap)

    def negated(self) -> WreathElement:
        """The product with the central element (-id, -id)."""
        return WreathElement(-self.f, -self.g, self.swap)

    def canonical(self) -> WreathElement:
        """
        The representative of {w, (-f, -g, swap)} whose f has a positive
        first nonzero entry.
        """
        first = next(a for a in self.f.entries if a)
        return self if first > 0 else self.negated()

    def equal_up_to_sign(self, other: WreathElement) -> bool:
        return self.canonical() == other.canonical()

    def __mul__(self, other: WreathElement) -> WreathElement:
        if not isinstance(other, WreathElement):
            return NotImplemented
        return wreath_compose(self, other)


def wreath_compose(w1: WreathElement, w2: WreathElement) -> WreathElement:
    """
    The product w1·w2:
        (f, g, 0)(f', g', s') = (ff', gg', s')
        (f, g, 1)(f', g', s') = (fg', gf', 1 + s')
    """
    if w1.swap:
        return WreathElement(w1.f @ w2.g, w1.g @ w2.f, not w2.swap)
    return WreathElement(w1.f @ w2.f, w1.g @ w2.g, w2.swap)


def wreath_invert(w: WreathElement) -> WreathElement:
    """(f, g, 0)⁻¹ = (f⁻¹, g⁻¹, 0) and (f, g, 1)⁻¹ = (g⁻¹, f⁻¹, 1)."""
    if w.swap:
        return WreathElement(invert(w.g), invert(w.f), True)
    return WreathElement(invert(w.f), invert(w.g), False)


def random_symplectic(sampler: SeededSampler, bound: int = 5) -> Matrix:
    """
    A random [[a, b], [c, d]] of determinant 1: a in ±1..bound, b and c in
    [-bound, bound], d = (1 + bc)/a, redrawn until height(d) <= bound.
    """
    while True:
        a = sampler.integer(1, bound) * (1 if sampler.coin() else -1)
        b = sampler.integer(-bound, bound)
        c = sampler.integer(-bound, bound)
        d = Fraction(1 + b * c, a)
        if height(d) <= bound:
            return Matrix.from_rows([[a, b], [c, d]])


def random_wreath(sampler: SeededSampler, bound: int = 5) -> WreathElement:
    f = random_symplectic(sampler, bound)
    g = random_symplectic(sampler, bound)
    return WreathElement(f, g, sampler.coin())


def _parse_2x2(text: str) -> Matrix:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"Expected four comma-separated entries, got {text!r}")
    return Matrix(2, 2, parts)
