"""
catalog.py

Constructors for the concrete superalgebras: the Kaplansky superalgebra K3,
the family D_t, the Kac superalgebra K10 (by its multiplication table and by
its tensor model F·1 ⊕ K3⊗K3), Jordan algebras of bilinear forms and of
superforms, symmetrized associative algebras, and the small helpers used to
assemble them.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from jordkit.algebra.graded_subspace import GradedSubspace
from jordkit.algebra.superalgebra import SuperAlgebra, multiply
from jordkit.errors import NotAssociativeError, VerificationError
from jordkit.linalg import Matrix
from jordkit.utils import ScalarLike, to_scalar

K3_LABELS = ("e", "x", "y")
K10_LABELS = ("e", "a", "b", "c1", "c2", "f", "p1", "p2", "q1", "q2")
TENSOR_LABELS = ("1", "ee", "xx", "xy", "yx", "yy", "ex", "ey", "xe", "ye")

# Table 1, row x column, both in K10_LABELS order.
K10_ROWS = (
    ("e", "a", "b", "c1", "c2", "0", "1/2*p1", "1/2*p2", "1/2*q1", "1/2*q2"),
    ("a", "4*e", "0", "0", "0", "0", "p1", "p2", "-q1", "-q2"),
    ("b", "0", "-4*e", "0", "0", "0", "q1", "q2", "-p1", "-p2"),
    ("c1", "0", "0", "0", "2*e", "0", "0", "q1", "0", "p1"),
    ("c2", "0", "0", "2*e", "0", "0", "q2", "0", "p2", "0"),
    ("0", "0", "0", "0", "0", "f", "1/2*p1", "1/2*p2", "1/2*q1", "1/2*q2"),
    ("1/2*p1", "p1", "q1", "0", "q2", "1/2*p1", "0", "a+2*e-6*f", "2*c1", "b"),
    ("1/2*p2", "p2", "q2", "q1", "0", "1/2*p2", "-a-2*e+6*f", "0", "-b", "-2*c2"),
    ("1/2*q1", "-q1", "-p1", "0", "p2", "1/2*q1", "-2*c1", "b", "0", "a-2*e+6*f"),
    ("1/2*q2", "-q2", "-p2", "p1", "0", "1/2*q2", "-b", "2*c2", "-a+2*e-6*f", "0"),
)

# Gram matrix of the form (v|w) on V = span{a, b, c1, c2}, read off v·w = (v|w)e.
K10_V_GRAM = Matrix.from_rows(
    [[4, 0, 0, 0], [0, -4, 0, 0], [0, 0, 0, 2], [0, 0, 2, 0]]
)

# The supersymmetric form on K3: (e|e) = 1/2, (x|y) = 1, (y|x) = -1.
K3_FORM = Matrix.from_rows(
    [[Fraction(1, 2), 0, 0], [0, 0, 1], [0, -1, 0]]
)

# Tensor-model basis vectors other than 1, as (left, right) indices into K3.
TENSOR_FACTORS = (
    (0, 0), (1, 1), (1, 2), (2, 1), (2, 2), (0, 1), (0, 2), (1, 0), (2, 0),
)


def table_from_rows(
    name: str,
    dim_even: int,
    labels: Sequence[str],
    rows: Sequence[Sequence[str]],
) -> SuperAlgebra:
    """
    Builds an algebra from a printed multiplication table whose cells are
    element expressions over `labels` (see SuperAlgebra.parse_element).
    """
    dim = len(labels)
    if len(rows) != dim or any(len(row) != dim for row in rows):
        raise ValueError(f"Multiplication table for {name} must be {dim}x{dim}")
    parser = SuperAlgebra(name, dim_even, dim - dim_even, labels, (), True)
    entries = []
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if cell.strip() == "0":
                # Explicit zero keeps the pair present in the table.
                entries.append((i, j, 0, 0))
                continue
            coords = parser.parse_element(cell).coords
            entries.extend((i, j, k, c) for k, c in enumerate(coords) if c)
    return SuperAlgebra(name, dim_even, dim - dim_even, labels, entries)


def make_k3() -> SuperAlgebra:
    """The Kaplansky superalgebra K3 on (e | x, y)."""
    half = Fraction(1, 2)
    return SuperAlgebra.from_products(
        "K3",
        1,
        2,
        K3_LABELS,
        {
            (0, 0): {0: 1},
            (0, 1): {1: half},
            (1, 0): {1: half},
            (0, 2): {2: half},
            (2, 0): {2: half},
            (1, 2): {0: 1},
            (2, 1): {0: -1},
        },
    )


def make_dt(t: ScalarLike) -> SuperAlgebra:
    """
    The superalgebra D_t on (e, f | u, v) with u·v = e + t·f.

    Args:
        t (ScalarLike): A nonzero rational.
    """
    t = to_scalar(t)
    if t == 0:
        raise ValueError("D_t requires t != 0")
    half = Fraction(1, 2)
    products = {
        (0, 0): {0: 1},
        (1, 1): {1: 1},
        (2, 3): {0: 1, 1: t},
        (3, 2): {0: -1, 1: -t},
    }
    for even in (0, 1):
        for odd in (2, 3):
            products[(even, odd)] = {odd: half}
            products[(odd, even)] = {odd: half}
    return SuperAlgebra.from_products(f"D({t})", 2, 2, ("e", "f", "u", "v"), products)


def make_k10_table() -> SuperAlgebra:
    """K10 exactly as given by its multiplication table, basis K10_LABELS."""
    return table_from_rows("K10", 6, K10_LABELS, K10_ROWS)


def make_k10_broken() -> SuperAlgebra:
    """
    K10 with the single entry a·a = 4e replaced by -4e. Still graded and
    supercommutative; the super-Jordan identity fails.
    """
    rows = [list(row) for row in K10_ROWS]
    rows[1][1] = "-4*e"
    return table_from_rows("K10-broken", 6, K10_LABELS, rows)


def make_bilinear_jordan(
    gram: Matrix,
    labels: Optional[Sequence[str]] = None,
    unit_label: str = "1",
    name: str = "J(V,Q)",
) -> SuperAlgebra:
    """
    The Jordan algebra F1 + V of a nondegenerate symmetric bilinear form,
    (λ1 + v)(μ1 + w) = (λμ + (v,w))1 + λw + μv.

    Args:
        gram (Matrix): Symmetric nondegenerate Gram matrix of (v,w).
        labels (Optional[Sequence[str]]): Labels of the V basis. Defaults to
            v1..vn.
        unit_label (str): Label of the unit.
        name (str): Name of the algebra.
    """
    if not gram.is_square or gram != gram.transpose():
        raise ValueError(f"Gram matrix must be symmetric:\n{gram}")
    if gram.determinant() == 0:
        raise ValueError(f"Gram matrix is degenerate:\n{gram}")
    n = gram.rows
    if labels is None:
        labels = tuple(f"v{i + 1}" for i in range(n))
    labels = tuple(labels)
    if len(labels) != n:
        raise ValueError(f"{len(labels)} labels for a form of rank {n}")
    products: dict[tuple[int, int], dict[int, Fraction]] = {(0, 0): {0: Fraction(1)}}
    for i in range(1, n + 1):
        products[(0, i)] = {i: Fraction(1)}
        products[(i, 0)] = {i: Fraction(1)}
        for j in range(1, n + 1):
            if gram[i - 1, j - 1]:
                products[(i, j)] = {0: gram[i - 1, j - 1]}
    return SuperAlgebra.from_products(name, n + 1, 0, (unit_label,) + labels, products)


@dataclass(frozen=True)
class SuperForm:
    """
    A nondegenerate supersymmetric bilinear form on V = V_0 ⊕ V_1:
    symmetric on V_0, skew-symmetric on V_1, V_0 ⊥ V_1.

    :ivar even_gram: Symmetric Gram matrix on V_0.
    :vartype even_gram: Matrix
    :ivar odd_gram: Skew-symmetric Gram matrix on V_1.
    :vartype odd_gram: Matrix
    """

    even_gram: Matrix
    odd_gram: Matrix

    def __post_init__(self):
        if self.even_gram != self.even_gram.transpose():
            raise ValueError(f"Even Gram matrix is not symmetric:\n{self.even_gram}")
        if self.odd_gram != -self.odd_gram.transpose():
            raise ValueError(f"Odd Gram matrix is not skew-symmetric:\n{self.odd_gram}")
        for part, gram in (("even", self.even_gram), ("odd", self.odd_gram)):
            if gram.rows and gram.determinant() == 0:
                raise ValueError(f"The {part} part of the superform is degenerate")


def make_superform_algebra(form: SuperForm, name: str = "J(superform)") -> SuperAlgebra:
    """
    The Jordan superalgebra Fe + V of a superform: e is the unit and
    v·w = (v,w)e for v, w in V.
    """
    m, k = form.even_gram.rows, form.odd_gram.rows
    labels = ("e",) + tuple(f"v{i + 1}" for i in range(m)) + tuple(
        f"w{i + 1}" for i in range(k)
    )
    products: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(1 + m + k):
        products[(0, i)] = {i: Fraction(1)}
        products[(i, 0)] = {i: Fraction(1)}
    for offset, gram in ((1, form.even_gram), (1 + m, form.odd_gram)):
        for i in range(gram.rows):
            for j in range(gram.cols):
                if gram[i, j]:
                    products[(offset + i, offset + j)] = {0: gram[i, j]}
    return SuperAlgebra.from_products(name, 1 + m, k, labels, products)


def make_plus(assoc: SuperAlgebra) -> SuperAlgebra:
    """
    The symmetrized superalgebra A+ with
    x·y = ½(xy + (-1)^{x̄ȳ} yx) on homogeneous basis vectors.

    Raises:
        NotAssociativeError: If `assoc` fails the associativity check.
    """
    from jordkit.identities.checks import check_associativity

    report = check_associativity(assoc)
    if not report.passed:
        raise NotAssociativeError(
            f"{assoc.name} is not associative:\n{report.summary()}"
        )
    half = Fraction(1, 2)
    entries = []
    for i in range(assoc.dim):
        for j in range(assoc.dim):
            sign = -1 if assoc.parity(i) and assoc.parity(j) else 1
            forward = assoc.product_coords(i, j)
            backward = assoc.product_coords(j, i)
            for k in range(assoc.dim):
                c = half * (forward[k] + sign * backward[k])
                if c:
                    entries.append((i, j, k, c))
    return SuperAlgebra(
        f"{assoc.name}+",
        assoc.dim_even,
        assoc.dim_odd,
        assoc.labels,
        entries,
        implicit_zero_rows=True,
    )


def make_matrix_algebra(n: int) -> SuperAlgebra:
    """The even associative algebra M_n(F) on matrix units E_ij."""
    if not isinstance(n, int) or not 1 <= n <= 4:
        raise ValueError(f"Matrix algebra size must be in 1..4, got {n}")
    units = [(i, j) for i in range(n) for j in range(n)]
    position = {unit: index for index, unit in enumerate(units)}
    products = {}
    for (i, j), left in position.items():
        for (k, m), right in position.items():
            if j == k:
                products[(left, right)] = {position[(i, m)]: 1}
    labels = [f"E{i + 1}{j + 1}" for i, j in units]
    return SuperAlgebra.from_products(f"M{n}", n * n, 0, labels, products)


def make_unit_algebra(label: str = "1", name: str = "F") -> SuperAlgebra:
    """The one-dimensional even algebra F with e² = e."""
    return SuperAlgebra.from_products(name, 1, 0, (label,), {(0, 0): {0: 1}})


def make_k10_tensor() -> SuperAlgebra:
    """
    The tensor model F·1 ⊕ K3⊗K3 of K10, on TENSOR_LABELS, with 1 a formal
    unit and
        (a⊗b)(c⊗d) = (-1)^{b̄c̄} (ac⊗bd - ¾ (a|c)(b|d) 1)
    for the supersymmetric form K3_FORM.
    """
    k3 = make_k3()
    position = {factors: index + 1 for index, factors in enumerate(TENSOR_FACTORS)}
    three_quarters = Fraction(3, 4)
    entries = [(0, j, j, 1) for j in range(10)]
    entries += [(i, 0, i, 1) for i in range(1, 10)]
    for (a, b), left in position.items():
        for (c, d), right in position.items():
            sign = -1 if k3.parity(b) and k3.parity(c) else 1
            row: dict[int, Fraction] = {}
            for k, x in k3.sparse_product(a, c):
                for m, y in k3.sparse_product(b, d):
                    index = position[(k, m)]
                    row[index] = row.get(index, Fraction(0)) + sign * x * y
            scalar = K3_FORM[a, c] * K3_FORM[b, d]
            if scalar:
                row[0] = row.get(0, Fraction(0)) - sign * three_quarters * scalar
            entries.extend((left, right, k, c) for k, c in sorted(row.items()) if c)
    return SuperAlgebra(
        "K10-tensor", 6, 4, TENSOR_LABELS, entries, implicit_zero_rows=True
    )


def king_decomposition(k10: SuperAlgebra) -> tuple[GradedSubspace, GradedSubspace]:
    """
    Splits the even part of K10 as J(V,Q) ⊕ Ff.

    Returns:
        tuple[GradedSubspace, GradedSubspace]: span{f} and span{e,a,b,c1,c2},
            each verified to be an ideal of the even part, with zero
            products between them and e the unit of the second.

    Raises:
        VerificationError: If any of those facts fails for `k10`.
    """
    even = GradedSubspace.even_part(k10)
    ideal_f = GradedSubspace.from_labels(k10, ["f"])
    ideal_j = GradedSubspace.from_labels(k10, ["e", "a", "b", "c1", "c2"])
    for name, ideal in (("Ff", ideal_f), ("J(V,Q)", ideal_j)):
        if not even.contains_subspace(ideal) or not ideal.is_ideal_of(even):
            raise VerificationError("king-decomposition", f"{name} is not an ideal")
    if ideal_f.sum(ideal_j) != even:
        raise VerificationError(
            "king-decomposition", "summands do not span the even part"
        )
    if ideal_f.product_span(ideal_j).dim or ideal_j.product_span(ideal_f).dim:
        raise VerificationError("king-decomposition", "cross products are nonzero")
    unit = k10["e"]
    if any(multiply(unit, x) != x or multiply(x, unit) != x for x in ideal_j.basis()):
        raise VerificationError("king-decomposition", "e is not the unit of J(V,Q)")
    return ideal_f, ideal_j


# Shared instances. Elements, subspaces and morphisms compare their algebras
# by identity, so every construction that does not receive an algebra
# explicitly uses these.


@lru_cache(maxsize=None)
def standard_k3() -> SuperAlgebra:
    return make_k3()


@lru_cache(maxsize=None)
def standard_k10() -> SuperAlgebra:
    return make_k10_table()


@lru_cache(maxsize=None)
def standard_k10_tensor() -> SuperAlgebra:
    return make_k10_tensor()
