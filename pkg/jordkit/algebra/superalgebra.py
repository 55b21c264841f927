from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Optional, Union

from jordkit.errors import AlgebraMismatchError, DimensionMismatchError, TableError
from jordkit.report import IdentityReport, Witness
from jordkit.utils import ScalarLike, format_scalar, to_scalar

Entry = tuple[int, int, int, Fraction]
"""One structure constant (i, j, k, c): e_i · e_j has c as its e_k coefficient."""

SparseRow = tuple[tuple[int, Fraction], ...]

_ZERO = Fraction(0)


class SuperAlgebra:
    """
    A finite-dimensional superalgebra given by graded structure constants.

    The basis is ordered even block first, then odd block. The table is kept
    sparsely as ``products[i][j] = ((k, c), ...)`` and a dense coordinate
    vector is cached the first time each pair is asked for.

    Tables are not assumed to be supercommutative or graded: both (i, j) and
    (j, i) must be supplied, and grading is a property checked afterwards.

    :ivar name: A label for the algebra.
    :vartype name: str
    :ivar dim_even: Dimension of the even part.
    :vartype dim_even: int
    :ivar dim_odd: Dimension of the odd part.
    :vartype dim_odd: int
    :ivar labels: Basis labels, even block first.
    :vartype labels: tuple[str, ...]
    """

    def __init__(
        self,
        name: str,
        dim_even: int,
        dim_odd: int,
        labels: Sequence[str],
        entries: Iterable[tuple[int, int, int, ScalarLike]],
        implicit_zero_rows: bool = False,
    ):
        """
        Args:
            name (str): A label for the algebra.
            dim_even (int): Dimension of the even part.
            dim_odd (int): Dimension of the odd part.
            labels (Sequence[str]): One label per basis vector, even first.
            entries (Iterable[tuple[int, int, int, ScalarLike]]): Structure
                constants (i, j, k, c). Omitted triples mean 0.
            implicit_zero_rows (bool): If False, every pair (i, j) must occur
                in `entries` at least once (possibly with c = 0).
        """
        if dim_even < 0 or dim_odd < 0:
            raise ValueError(f"Negative dimensions ({dim_even}, {dim_odd})")
        dim = dim_even + dim_odd
        labels = tuple(labels)
        if len(labels) != dim:
            raise TableError(f"{len(labels)} labels given for dimension {dim}")
        if len(set(labels)) != dim:
            raise TableError(f"Duplicate basis labels in {labels}")

        coefficients: dict[tuple[int, int], dict[int, Fraction]] = {}
        for entry in entries:
            if len(entry) != 4:
                raise TableError(f"Table entry {entry!r} is not (i, j, k, c)")
            i, j, k, c = entry
            for index in (i, j, k):
                if not isinstance(index, int) or not 0 <= index < dim:
                    raise TableError(
                        f"Index {index!r} out of range in entry {entry!r}"
                        f" (dimension {dim})"
                    )
            row = coefficients.setdefault((i, j), {})
            if k in row:
                raise TableError(f"Duplicate table entry for ({i}, {j}, {k})")
            row[k] = to_scalar(c)

        if not implicit_zero_rows:
            missing = [
                (i, j) for i in range(dim) for j in range(dim)
                if (i, j) not in coefficients
            ]
            if missing:
                i, j = missing[0]
                raise TableError(
                    f"{len(missing)} basis pairs have no table entry, first"
                    f" ({labels[i]}, {labels[j]}); set implicit_zero_rows to"
                    " allow this"
                )

        self.name = name
        self.dim_even = dim_even
        self.dim_odd = dim_odd
        self.labels = labels
        self._products: list[list[SparseRow]] = [
            [
                tuple(
                    (k, c)
                    for k, c in sorted(coefficients.get((i, j), {}).items())
                    if c
                )
                for j in range(dim)
            ]
            for i in range(dim)
        ]
        self._dense: list[list[Optional[tuple[Fraction, ...]]]] = [
            [None] * dim for _ in range(dim)
        ]
        self._label_index = {label: index for index, label in enumerate(labels)}

    @classmethod
    def from_products(
        cls,
        name: str,
        dim_even: int,
        dim_odd: int,
        labels: Sequence[str],
        products: Mapping[tuple[int, int], Mapping[int, ScalarLike]],
    ) -> SuperAlgebra:
        """
        Builds an algebra from ``{(i, j): {k: c}}``; absent pairs multiply
        to zero.
        """
        entries = [
            (i, j, k, c) for (i, j), row in products.items() for k, c in row.items()
        ]
        return cls(name, dim_even, dim_odd, labels, entries, implicit_zero_rows=True)

    # Shape

    @property
    def dim(self) -> int:
        return self.dim_even + self.dim_odd

    def parity(self, index: int) -> int:
        """Parity of the basis vector `index`: 0 for even, 1 for odd."""
        return 0 if index < self.dim_even else 1

    @property
    def even_indices(self) -> range:
        return range(self.dim_even)

    @property
    def odd_indices(self) -> range:
        return range(self.dim_even, self.dim)

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"{self.name} has no basis vector {label!r}") from None

    # Table access

    def sparse_product(self, i: int, j: int) -> SparseRow:
        return self._products[i][j]

    def product_coords(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Dense coordinates of e_i · e_j."""
        cached = self._dense[i][j]
        if cached is None:
            vector = [_ZERO] * self.dim
            for k, c in self._products[i][j]:
                vector[k] = c
            cached = tuple(vector)
            self._dense[i][j] = cached
        return cached

    def entries(self) -> list[Entry]:
        """All nonzero structure constants, sorted by (i, j, k)."""
        return [
            (i, j, k, c)
            for i in range(self.dim)
            for j in range(self.dim)
            for k, c in self._products[i][j]
        ]

    def multiply_coords(
        self, x: Sequence[Fraction], y: Sequence[Fraction]
    ) -> tuple[Fraction, ...]:
        """The bilinear extension of the table, on raw coordinate vectors."""
        result = [_ZERO] * self.dim
        y_support = [(j, b) for j, b in enumerate(y) if b]
        if not y_support:
            return tuple(result)
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._products[i]
            for j, b in y_support:
                ab = a * b
                for k, c in row[j]:
                    result[k] += ab * c
        return tuple(result)

    # Elements

    def element(self, coords: Sequence[ScalarLike]) -> Element:
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, (_ZERO,) * self.dim)

    def basis_element(self, index: int) -> Element:
        if not 0 <= index < self.dim:
            raise IndexError(f"Basis index {index} out of range for {self.name}")
        return Element(self, tuple(Fraction(int(i == index)) for i in range(self.dim)))

    def basis_elements(self) -> list[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    def __getitem__(self, label: str) -> Element:
        return self.basis_element(self.index(label))

    def parse_element(self, text: str) -> Element:
        """
        Parses a linear combination of basis labels such as ``"p2+q2"``,
        ``"2*e - a"`` or ``"-1/2 p1"``.

        A coefficient may be followed by ``*``; it must be when the label
        starts with a digit, as the tensor-model unit ``1`` does.
        """
        label_pattern = "|".join(
            re.escape(label) for label in sorted(self.labels, key=len, reverse=True)
        )
        term = re.compile(
            r"\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*)?)?(" + label_pattern + r")\s*"
        )
        coords = [_ZERO] * self.dim
        position = 0
        text = text.strip()
        if not text:
            raise ValueError("Empty element expression")
        while position < len(text):
            match = term.match(text, position)
            if match is None or match.end() == position:
                raise ValueError(
                    f"Cannot parse {text!r} at position {position} over basis"
                    f" {self.labels}"
                )
            sign, coefficient, label = match.groups()
            if position > 0 and not sign:
                raise ValueError(f"Missing operator before {label!r} in {text!r}")
            value = to_scalar(coefficient) if coefficient else Fraction(1)
            if sign == "-":
                value = -value
            coords[self.index(label)] += value
            position = match.end()
        return Element(self, coords)

    def __repr__(self) -> str:
        return f"SuperAlgebra({self.name!r}, dims=({self.dim_even}, {self.dim_odd}))"


class Element:
    """
    A vector of a SuperAlgebra, stored by its exact coordinates.

    ``x * y`` is the algebra product; ``c * x`` with an int or Fraction `c`
    scales.

    :ivar algebra: The algebra this element lives in.
    :vartype algebra: SuperAlgebra
    :ivar coords: Coordinates against the algebra's basis.
    :vartype coords: tuple[Fraction, ...]
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: SuperAlgebra, coords: Sequence[ScalarLike]):
        if len(coords) != algebra.dim:
            raise DimensionMismatchError(
                f"{len(coords)} coordinates for {algebra.name} of dimension"
                f" {algebra.dim}"
            )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", tuple(to_scalar(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    def _same_algebra(self, other: Element):
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError(
                f"Elements of {self.algebra.name} and {other.algebra.name} combined"
            )

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._same_algebra(other)
        return Element(
            self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        self._same_algebra(other)
        return Element(
            self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> Element:
        return Element(self.algebra, tuple(-a for a in self.coords))

    def scale(self, factor: ScalarLike) -> Element:
        factor = to_scalar(factor)
        return Element(self.algebra, tuple(factor * a for a in self.coords))

    def __rmul__(self, factor: Union[int, Fraction]) -> Element:
        if isinstance(factor, (int, Fraction)) and not isinstance(factor, bool):
            return self.scale(factor)
        return NotImplemented

    def __mul__(self, other: Union[Element, int, Fraction]) -> Element:
        if isinstance(other, Element):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, divisor: Union[int, Fraction]) -> Element:
        return self.scale(Fraction(1) / to_scalar(divisor))

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def parity(self) -> Optional[int]:
        """0 or 1 for a homogeneous element (zero counts as even), else None."""
        dim_even = self.algebra.dim_even
        has_even = any(self.coords[:dim_even])
        has_odd = any(self.coords[dim_even:])
        if has_even and has_odd:
            return None
        return 1 if has_odd else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coords))

    def to_strings(self) -> list[str]:
        return [format_scalar(c) for c in self.coords]

    def __str__(self) -> str:
        terms = []
        for label, c in zip(self.algebra.labels, self.coords):
            if not c:
                continue
            magnitude = abs(c)
            body = label if magnitude == 1 else f"{format_scalar(magnitude)}*{label}"
            if not terms:
                terms.append(f"-{body}" if c < 0 else body)
            else:
                terms.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Element({self.algebra.name!r}, {self})"


#  Operations


def multiply(x: Element, y: Element) -> Element:
    """
    The product x · y, by bilinear extension of the structure constants.

    Raises:
        AlgebraMismatchError: If x and y belong to different algebras.
    """
    x._same_algebra(y)
    return Element(x.algebra, x.algebra.multiply_coords(x.coords, y.coords))


def parity_parts(x: Element) -> tuple[Element, Element]:
    """Splits x into its even and odd components."""
    algebra = x.algebra
    dim_even = algebra.dim_even
    zeros_even = (_ZERO,) * dim_even
    zeros_odd = (_ZERO,) * algebra.dim_odd
    even = Element(algebra, x.coords[:dim_even] + zeros_odd)
    odd = Element(algebra, zeros_even + x.coords[dim_even:])
    return even, odd


def associator(x: Element, y: Element, z: Element) -> Element:
    """The associator (x, y, z) = (x·y)·z − x·(y·z)."""
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z))


def check_grading(a: SuperAlgebra) -> IdentityReport:
    """
    Checks A_α A_β ⊆ A_{α+β} on every basis pair.

    Each violation is reported with indices (i, j, k) and the offending
    component c·e_k of e_i · e_j.
    """
    witnesses = []
    for i, j, k, c in a.entries():
        if a.parity(k) != (a.parity(i) + a.parity(j)) % 2:
            witnesses.append(Witness((i, j, k), a.basis_element(k).scale(c)))
    return IdentityReport.from_witnesses("grading", witnesses, a.dim * a.dim)


def is_unit(a: SuperAlgebra, x: Element) -> bool:
    """True if x is a two-sided identity: x·e_i = e_i·x = e_i for every i."""
    if x.algebra is not a:
        raise AlgebraMismatchError(f"Element of {x.algebra.name} tested in {a.name}")
    for basis in a.basis_elements():
        if multiply(x, basis) != basis or multiply(basis, x) != basis:
            return False
    return True


def direct_sum(
    a: SuperAlgebra,
    b: SuperAlgebra,
    name: Optional[str] = None,
    prefixes: Optional[tuple[str, str]] = None,
) -> SuperAlgebra:
    """
    The direct sum a ⊕ b: block-diagonal table, cross products zero.

    The basis is ordered even(a), even(b), odd(a), odd(b) so that the even
    block still comes first. Labels are prefixed ``"<prefix>."``, by default
    with the summand names.

    Args:
        a (SuperAlgebra): First summand.
        b (SuperAlgebra): Second summand.
        name (Optional[str]): Name of the result. Defaults to "a+b".
        prefixes (Optional[tuple[str, str]]): Label prefixes for the summands.

    Returns:
        SuperAlgebra: The direct sum.
    """
    if prefixes is None:
        if a.name != b.name:
            prefixes = (a.name, b.name)
        else:
            prefixes = (f"{a.name}1", f"{b.name}2")

    def placement(algebra: SuperAlgebra, even_offset: int, odd_offset: int):
        return [
            even_offset + i
            if i < algebra.dim_even
            else odd_offset + i - algebra.dim_even
            for i in range(algebra.dim)
        ]

    dim_even = a.dim_even + b.dim_even
    place_a = placement(a, 0, dim_even)
    place_b = placement(b, a.dim_even, dim_even + a.dim_odd)

    labels = [""] * (a.dim + b.dim)
    summands = ((a, place_a, prefixes[0]), (b, place_b, prefixes[1]))
    for algebra, place, prefix in summands:
        for i, label in enumerate(algebra.labels):
            labels[place[i]] = f"{prefix}.{label}"

    entries = [
        (place[i], place[j], place[k], c)
        for algebra, place in ((a, place_a), (b, place_b))
        for i, j, k, c in algebra.entries()
    ]
    return SuperAlgebra(
        name or f"{a.name}+{b.name}",
        dim_even,
        a.dim_odd + b.dim_odd,
        labels,
        entries,
        implicit_zero_rows=True,
    )
