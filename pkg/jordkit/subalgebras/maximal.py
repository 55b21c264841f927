"""
maximal.py

The four maximal subalgebras of K10 and a randomized maximality probe.

The probe can only refute: it adjoins every complement basis vector and a
number of seeded random elements to B and checks that each regenerates the
whole algebra. Passing it means "probably maximal".
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Optional

from jordkit.algebra import Element, GradedSubspace, SuperAlgebra, standard_k10
from jordkit.errors import VerificationError
from jordkit.subalgebras.closure import span_closure
from jordkit.utils import SeededSampler, parallel_map

logger = logging.getLogger(__name__)

KINDS = ("i", "ii", "iii", "iv")

MAXIMAL_BASES = {
    "i": ("e", "a", "b", "c1", "c2", "f"),
    "ii": ("e", "f", "a", "p1", "p2"),
    "iii": ("e", "f", "a+b", "c1", "p1", "q1", "p2+q2"),
    "iv": ("e", "f", "a", "b", "c1", "p1", "q1"),
}

PROBABLY_MAXIMAL = "probably-maximal"
NOT_MAXIMAL = "not-maximal"


def require_kind(kind: str, kinds=KINDS) -> str:
    if kind not in kinds:
        raise ValueError(f"Unknown subalgebra kind {kind!r}; expected one of {kinds}")
    return kind


def maximal_subalgebra(
    kind: str, k10: Optional[SuperAlgebra] = None
) -> GradedSubspace:
    """
    The maximal subalgebra (i)-(iv) of K10, verified to be a proper
    subalgebra containing the unit e + f.

    Raises:
        ValueError: If `kind` is not one of i, ii, iii, iv.
    """
    require_kind(kind)
    k10 = k10 or standard_k10()
    b = GradedSubspace.from_labels(k10, MAXIMAL_BASES[kind])
    if not b.is_subalgebra():
        raise VerificationError(f"maximal-{kind}", f"{b} is not closed")
    if not b.is_proper():
        raise VerificationError(f"maximal-{kind}", f"{b} is all of {k10.name}")
    if not b.contains(k10["e"] + k10["f"]):
        raise VerificationError(f"maximal-{kind}", "unit e + f is missing")
    return b


@dataclass(frozen=True)
class ProbeResult:
    """
    Outcome of maximality_probe.

    :ivar verdict: "probably-maximal" or "not-maximal".
    :vartype verdict: str
    :ivar checked: Number of adjunctions tried.
    :vartype checked: int
    :ivar witness: First adjoined element whose closure with B is proper.
    :vartype witness: Optional[Element]
    :ivar witness_closure: That proper closure.
    :vartype witness_closure: Optional[GradedSubspace]
    :ivar saturation: A proper subalgebra containing the witness closure that
        no complement basis vector extends properly.
    :vartype saturation: Optional[GradedSubspace]
    """

    verdict: str
    checked: int
    witness: Optional[Element] = None
    witness_closure: Optional[GradedSubspace] = field(default=None, compare=False)
    saturation: Optional[GradedSubspace] = field(default=None, compare=False)

    @property
    def maximal(self) -> bool:
        return self.verdict == PROBABLY_MAXIMAL

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {"verdict": self.verdict, "checked": self.checked}
        if self.witness is not None:
            result["witness"] = str(self.witness)
            result["witness_closure"] = [str(x) for x in self.witness_closure.basis()]
            result["saturation"] = [str(x) for x in self.saturation.basis()]
        return result


def _adjoin(b: GradedSubspace, x: Element) -> GradedSubspace:
    return span_closure(b.algebra, b.basis() + [x])


def saturate(s: GradedSubspace) -> GradedSubspace:
    """
    Adjoins complement basis vectors of s greedily while the closure stays
    proper.
    """
    current = s
    extended = True
    while extended:
        extended = False
        for x in current.complement_basis():
            candidate = _adjoin(current, x)
            if candidate.is_proper():
                current = candidate
                extended = True
                break
    return current


def random_outside(
    b: GradedSubspace, sampler: SeededSampler, bound: int = 3
) -> Element:
    """Small integer coordinates in [-bound, bound], redrawn until outside b."""
    a = b.algebra
    while True:
        x = a.element(sampler.vector(a.dim, bound))
        if not b.contains(x):
            return x


def maximality_probe(
    b: GradedSubspace, trials: int = 200, seed: int = 1, jobs: int = 1
) -> ProbeResult:
    """
    Checks span_closure(b ∪ {x}) = A for every complement basis vector x of b
    and for `trials` seeded random x outside b.

    Args:
        b (GradedSubspace): A proper subalgebra.
        trials (int): Number of random adjunctions.
        seed (int): Seed for the random adjunctions; trial k draws from
            SeededSampler(seed).split(k).
        jobs (int): Worker threads.

    Returns:
        ProbeResult: The verdict, and for a refutation the first witness in
            order (basis vectors before random trials), its closure and a
            saturation.

    Raises:
        ValueError: If b is not a proper subalgebra.
    """
    if not b.is_proper():
        raise ValueError(f"{b} is not proper")
    if not b.is_subalgebra():
        raise ValueError(f"{b} is not a subalgebra")
    sampler = SeededSampler(seed)
    candidates = list(b.complement_basis())

    def trial(k: int) -> Element:
        return random_outside(b, sampler.split(k))

    candidates += parallel_map(trial, range(trials), jobs)
    closures = parallel_map(lambda x: _adjoin(b, x), candidates, jobs)
    logger.debug("probed %s with %d adjunctions", b, len(candidates))
    for x, closure in zip(candidates, closures):
        if closure.is_proper():
            logger.info("refuted maximality of %s by %s", b, x)
            return ProbeResult(
                NOT_MAXIMAL, len(candidates), x, closure, saturate(closure)
            )
    return ProbeResult(PROBABLY_MAXIMAL, len(candidates))
