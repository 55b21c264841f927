"""
grassmann.py

The Grassmann (exterior) algebra on n odd generators g1..gn. Monomials are
indexed by subsets of {1..n}, held as frozenbitarray masks with bit k set
for generator k+1.
"""
from __future__ import annotations

from bitarray import frozenbitarray
from bitarray.util import count_and, int2ba, zeros

from jordkit.algebra.superalgebra import SuperAlgebra

MAX_GENERATORS = 8


def monomial_masks(n: int) -> list[frozenbitarray]:
    """
    All 2^n subset masks, even-sized subsets first, each block ordered by
    size and then lexicographically on the generator indices.
    """
    masks = [
        frozenbitarray(int2ba(value, length=n, endian="little"))
        if n
        else frozenbitarray()
        for value in range(1 << n)
    ]

    def sort_key(mask: frozenbitarray):
        size = mask.count()
        return size % 2, size, [k for k in range(n) if mask[k]]

    return sorted(masks, key=sort_key)


def monomial_label(mask: frozenbitarray) -> str:
    indices = [str(k + 1) for k in range(len(mask)) if mask[k]]
    return "g" + "".join(indices) if indices else "1"


def monomial_sign(left: frozenbitarray, right: frozenbitarray) -> int:
    """
    Sign of g_S · g_T = ± g_{S∪T} for disjoint S, T: (-1) to the number of
    pairs s in S, t in T with s > t.
    """
    n = len(left)
    inversions = 0
    for t in range(n):
        if right[t]:
            above = zeros(n, endian="little")
            above[t + 1 :] = 1
            inversions += count_and(left, above)
    return -1 if inversions % 2 else 1


def make_grassmann(n: int) -> SuperAlgebra:
    """
    The 2^n-dimensional Grassmann superalgebra on n anticommuting odd
    generators.

    Args:
        n (int): Number of generators, 0 <= n <= 8.

    Returns:
        SuperAlgebra: Basis of monomials, parity = subset size mod 2.
    """
    if not isinstance(n, int) or not 0 <= n <= MAX_GENERATORS:
        raise ValueError(
            f"Grassmann generator count must be in 0..{MAX_GENERATORS}, got {n}"
        )
    masks = monomial_masks(n)
    position = {mask: index for index, mask in enumerate(masks)}
    dim_even = sum(1 for mask in masks if mask.count() % 2 == 0)
    entries = []
    for i, left in enumerate(masks):
        for j, right in enumerate(masks):
            if n and count_and(left, right):
                continue
            k = position[left | right] if n else 0
            entries.append((i, j, k, monomial_sign(left, right)))
    return SuperAlgebra(
        f"Grassmann({n})",
        dim_even,
        len(masks) - dim_even,
        [monomial_label(mask) for mask in masks],
        entries,
        implicit_zero_rows=True,
    )
