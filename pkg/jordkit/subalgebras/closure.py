from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from jordkit.algebra import (
    Element,
    GradedSubspace,
    SuperAlgebra,
    multiply,
    parity_parts,
)
from jordkit.errors import AlgebraMismatchError, VerificationError
from jordkit.linalg import EchelonBuilder, Matrix, Subspace, nullspace, solve
from jordkit.morphisms import Morphism, is_homomorphism, is_isomorphism

logger = logging.getLogger(__name__)


def span_closure(a: SuperAlgebra, generators: Iterable[Element]) -> GradedSubspace:
    """
    The subalgebra generated by `generators`: the least graded subspace
    containing them and closed under the product.

    Homogeneous components are adjoined one at a time; each new vector is
    multiplied on both sides by everything adjoined so far, until nothing
    new appears or the whole algebra is reached.
    """
    builder = EchelonBuilder(a.dim)
    basis: list[Element] = []
    pending: list[Element] = []
    for generator in generators:
        if generator.algebra is not a:
            raise AlgebraMismatchError(
                f"Generator of {generator.algebra.name} given for {a.name}"
            )
        pending.extend(p for p in parity_parts(generator) if not p.is_zero())
    rounds = 0
    while pending and builder.dim < a.dim:
        x = pending.pop(0)
        if not builder.insert(x.coords):
            continue
        basis.append(x)
        rounds += 1
        for y in basis:
            pending.append(multiply(x, y))
            if y is not x:
                pending.append(multiply(y, x))
    logger.debug("closure in %s: %d vectors adjoined", a.name, rounds)
    if builder.dim == a.dim:
        return GradedSubspace.full(a)
    return GradedSubspace.from_elements(a, basis)


def is_subalgebra(s: GradedSubspace) -> bool:
    return s.is_subalgebra()


def is_ideal(s: GradedSubspace, parent: GradedSubspace) -> bool:
    """
    Raises:
        ValueError: If s is not contained in `parent`.
    """
    return s.is_ideal_of(parent)


def is_solvable(s: GradedSubspace) -> bool:
    """
    Follows the derived chain s, s², (s²)², ... and reports whether it
    reaches zero within dim(s) + 1 steps.
    """
    current = s
    for _ in range(s.dim + 1):
        if current.dim == 0:
            return True
        following = current.product_span(current)
        if following == current:
            return False
        current = following
    return current.dim == 0


@dataclass(frozen=True)
class QuotientPresentation:
    """
    A quotient B/R with its projection.

    :ivar quotient: B/R, on the images of `representatives`.
    :vartype quotient: SuperAlgebra
    :ivar projection: Surjective homomorphism from `parent` onto `quotient`.
    :vartype projection: Morphism
    :ivar parent: B as an algebra in its own right (GradedSubspace.restrict).
    :vartype parent: SuperAlgebra
    :ivar representatives: Elements of the ambient algebra whose classes form
        the quotient basis.
    :vartype representatives: tuple[Element, ...]
    """

    quotient: SuperAlgebra
    projection: Morphism
    parent: SuperAlgebra
    representatives: tuple[Element, ...]

    def representative(self, label: str) -> Element:
        return self.representatives[self.quotient.index(label)]


def quotient(
    b: GradedSubspace, r: GradedSubspace, name: str = ""
) -> QuotientPresentation:
    """
    The quotient algebra b/r.

    The quotient basis is the classes of the basis vectors of b at the
    non-pivot coordinates of r, both read in b's own echelon coordinates.
    Classes are labelled ``[x]`` after their representative x.

    Raises:
        ValueError: If b is not a subalgebra or r is not an ideal of b.
        VerificationError: If the projection fails to be a homomorphism.
    """
    if not b.is_subalgebra():
        raise ValueError(f"{b} is not a subalgebra")
    if not r.is_ideal_of(b):
        raise ValueError(f"{r} is not an ideal of {b}")
    parent = b.restrict(name=f"{b.algebra.name}|B")
    ambient_basis = b.basis()
    ideal_in_parent = GradedSubspace.from_elements(
        parent, (parent.element(b.coordinates(x)) for x in r.basis())
    )
    complement = ideal_in_parent.complement_basis()
    kept = [x.coords.index(1) for x in complement]
    ideal_vectors = [x.coords for x in ideal_in_parent.basis()]
    change = Matrix.from_columns([x.coords for x in complement] + ideal_vectors)
    size = len(kept)

    def project(coords) -> tuple:
        solution = solve(change, coords)
        if solution is None:
            raise VerificationError("quotient", "complement and ideal do not span B")
        return solution[:size]

    representatives = tuple(ambient_basis[k] for k in kept)
    labels = [f"[{parent.labels[k]}]" for k in kept]
    entries = []
    for i, left in enumerate(kept):
        for j, right in enumerate(kept):
            for k, c in enumerate(project(parent.product_coords(left, right))):
                if c:
                    entries.append((i, j, k, c))
    dim_even = sum(1 for k in kept if parent.parity(k) == 0)
    algebra = SuperAlgebra(
        name or f"{b.algebra.name}|B/R",
        dim_even,
        size - dim_even,
        labels,
        entries,
        implicit_zero_rows=True,
    )
    projection = Morphism(
        parent,
        algebra,
        Matrix.from_columns(
            [project(parent.basis_element(k).coords) for k in range(parent.dim)]
        ),
    )
    report = is_homomorphism(projection)
    if not report.passed:
        raise VerificationError("quotient", report.summary())
    return QuotientPresentation(algebra, projection, parent, representatives)


def fixed_subalgebra(m: Morphism) -> GradedSubspace:
    """
    The fixed points {z : m(z) = z} of an automorphism, as a graded
    subspace; verified to be a subalgebra.

    Raises:
        ValueError: If m is not an isomorphism of an algebra onto itself.
    """
    if not m.is_endomorphism or not is_isomorphism(m):
        raise ValueError(f"{m!r} is not an automorphism")
    a = m.source
    blocks = []
    for indices in (list(a.even_indices), list(a.odd_indices)):
        block = m.matrix.submatrix(indices, indices) - Matrix.identity(len(indices))
        blocks.append(Subspace(len(indices), nullspace(block)))
    fixed = GradedSubspace(a, *blocks)
    if not fixed.is_subalgebra():
        raise VerificationError("fixed-subalgebra", f"{fixed} is not closed")
    return fixed
