"""
checks.py

Exhaustive basis sweeps for supercommutativity, the super-Jordan identity,
the (linearized) Jordan identity and associativity. All four identities are
multilinear in the form checked here, so vanishing on basis tuples decides
them on the whole algebra.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from jordkit.algebra.superalgebra import SuperAlgebra, check_grading
from jordkit.errors import NotSupercommutativeError, UngradedError
from jordkit.report import IdentityReport, Witness
from jordkit.utils import parallel_map

logger = logging.getLogger(__name__)

CHARACTERISTIC_NOTE = (
    "supercommutativity plus the super-Jordan identity characterize Jordan"
    " superalgebras in characteristic != 2, 3; coefficients here are rational"
)

Coords = tuple[Fraction, ...]


def _basis_coords(a: SuperAlgebra, index: int) -> Coords:
    return tuple(Fraction(int(k == index)) for k in range(a.dim))


def _combine(a: SuperAlgebra, terms: list[tuple[int, Coords]]) -> Coords:
    result = [Fraction(0)] * a.dim
    for sign, vector in terms:
        for k, c in enumerate(vector):
            if c:
                result[k] += sign * c
    return tuple(result)


def _require_graded(a: SuperAlgebra):
    grading = check_grading(a)
    if not grading.passed:
        raise UngradedError(f"{a.name} is not graded:\n{grading.summary()}")


def check_supercommutativity(a: SuperAlgebra, jobs: int = 1) -> IdentityReport:
    """
    Checks xy = (-1)^{x̄ȳ} yx on all ordered basis pairs.

    Raises:
        UngradedError: If `a` violates the grading.
    """
    _require_graded(a)

    def row(i: int) -> list[Witness]:
        found = []
        for j in range(a.dim):
            sign = -1 if a.parity(i) and a.parity(j) else 1
            defect = _combine(
                a, [(1, a.product_coords(i, j)), (-sign, a.product_coords(j, i))]
            )
            if any(defect):
                found.append(Witness((i, j), a.element(defect)))
        return found

    witnesses = [w for chunk in parallel_map(row, range(a.dim), jobs) for w in chunk]
    logger.debug("supercommutativity on %s: %d pairs", a.name, a.dim * a.dim)
    return IdentityReport.from_witnesses(
        "supercommutativity", witnesses, a.dim * a.dim
    )


def super_jordan_defect(a: SuperAlgebra, x: int, y: int, z: int, t: int) -> Coords:
    """
    The cyclic sum over (x, y, t), z fixed, of
    (-1)^{(x̄+z̄)t̄} ((xy)z)t - (xy)(zt), on basis indices.
    """
    p = a.parity
    e_z = _basis_coords(a, z)
    terms = []
    for first, second, third in ((x, y, t), (y, t, x), (t, x, y)):
        sign = -1 if ((p(first) + p(z)) * p(third)) % 2 else 1
        product = a.product_coords(first, second)
        left = a.multiply_coords(
            a.multiply_coords(product, e_z), _basis_coords(a, third)
        )
        right = a.multiply_coords(product, a.product_coords(z, third))
        terms.append((sign, left))
        terms.append((-sign, right))
    return _combine(a, terms)


def check_super_jordan(a: SuperAlgebra, jobs: int = 1) -> IdentityReport:
    """
    Checks the super-Jordan identity on every basis quadruple (x, y, z, t).

    Raises:
        UngradedError: If `a` violates the grading.
        NotSupercommutativeError: If `a` is not supercommutative.
    """
    commutativity = check_supercommutativity(a, jobs=jobs)
    if not commutativity.passed:
        raise NotSupercommutativeError(
            f"{a.name} is not supercommutative:\n{commutativity.summary()}"
        )
    n = a.dim

    def block(x: int) -> list[Witness]:
        found = []
        for y in range(n):
            for z in range(n):
                for t in range(n):
                    defect = super_jordan_defect(a, x, y, z, t)
                    if any(defect):
                        found.append(Witness((x, y, z, t), a.element(defect)))
        return found

    witnesses = [w for chunk in parallel_map(block, range(n), jobs) for w in chunk]
    logger.debug("super-Jordan on %s: %d quadruples", a.name, n**4)
    return IdentityReport.from_witnesses(
        "super-jordan", witnesses, n**4, characteristic=CHARACTERISTIC_NOTE
    )


def jordan_defect(a: SuperAlgebra, x1: int, x2: int, x3: int, y: int) -> Coords:
    """
    Full linearization in x of (x²y)x - x²(yx):
    the sum over orderings σ of ((x_σ1 x_σ2) y) x_σ3 - (x_σ1 x_σ2)(y x_σ3).
    """
    e_y = _basis_coords(a, y)
    terms = []
    for s1, s2, s3 in permutations((x1, x2, x3)):
        square = a.product_coords(s1, s2)
        left = a.multiply_coords(a.multiply_coords(square, e_y), _basis_coords(a, s3))
        right = a.multiply_coords(square, a.product_coords(y, s3))
        terms.append((1, left))
        terms.append((-1, right))
    return _combine(a, terms)


def check_jordan(a: SuperAlgebra, jobs: int = 1) -> IdentityReport:
    """
    Checks a purely even algebra for xy = yx on basis pairs and the
    linearized Jordan identity on basis quadruples. The linearization is
    symmetric in x1, x2, x3, so only x1 <= x2 <= x3 is evaluated.

    Raises:
        ValueError: If `a` has a nonzero odd part.
    """
    if a.dim_odd:
        raise ValueError(
            f"{a.name} has odd dimension {a.dim_odd};"
            " check_jordan needs an even algebra"
        )
    n = a.dim
    witnesses = []
    for i in range(n):
        for j in range(n):
            defect = _combine(
                a, [(1, a.product_coords(i, j)), (-1, a.product_coords(j, i))]
            )
            if any(defect):
                witnesses.append(Witness((i, j), a.element(defect)))
    triples = list(combinations_with_replacement(range(n), 3))

    def block(triple: tuple[int, int, int]) -> list[Witness]:
        found = []
        for y in range(n):
            defect = jordan_defect(a, *triple, y)
            if any(defect):
                found.append(Witness(triple + (y,), a.element(defect)))
        return found

    witnesses += [w for chunk in parallel_map(block, triples, jobs) for w in chunk]
    checked = n * n + len(triples) * n
    logger.debug("Jordan on %s: %d instances", a.name, checked)
    return IdentityReport.from_witnesses("jordan", witnesses, checked)


def check_associativity(a: SuperAlgebra, jobs: int = 1) -> IdentityReport:
    """Checks (xy)z = x(yz) on every basis triple."""
    n = a.dim

    def block(i: int) -> list[Witness]:
        found = []
        for j in range(n):
            product = a.product_coords(i, j)
            for k in range(n):
                left = a.multiply_coords(product, _basis_coords(a, k))
                right = a.multiply_coords(_basis_coords(a, i), a.product_coords(j, k))
                defect = _combine(a, [(1, left), (-1, right)])
                if any(defect):
                    found.append(Witness((i, j, k), a.element(defect)))
        return found

    witnesses = [w for chunk in parallel_map(block, range(n), jobs) for w in chunk]
    return IdentityReport.from_witnesses("associativity", witnesses, n**3)


def check_jordan_superalgebra(a: SuperAlgebra, jobs: int = 1) -> list[IdentityReport]:
    """
    The full direct suite: grading, supercommutativity and super-Jordan.
    Stops after the first failing stage, whose report is last in the list.
    """
    reports = [check_grading(a)]
    if not reports[-1].passed:
        return reports
    reports.append(check_supercommutativity(a, jobs=jobs))
    if not reports[-1].passed:
        return reports
    reports.append(check_super_jordan(a, jobs=jobs))
    return reports
