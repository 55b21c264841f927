"""
envelope.py

Truncated Grassmann envelopes G(A) = G_0⊗A_0 ⊕ G_1⊗A_1 and the Jordan
identities checked on them.
"""
from __future__ import annotations

import logging

from jordkit.algebra.grassmann import make_grassmann
from jordkit.algebra.superalgebra import SuperAlgebra, check_grading
from jordkit.errors import UngradedError
from jordkit.report import IdentityReport, Witness
from jordkit.utils import SeededSampler, parallel_map

logger = logging.getLogger(__name__)

MAX_ENVELOPE_DEGREE = 4


def grassmann_envelope(a: SuperAlgebra, n: int) -> SuperAlgebra:
    """
    The even algebra G(a, n) inside Grassmann(n)⊗a, with
    (g⊗u)(h⊗v) = gh⊗uv.

    Basis vectors are labelled ``"<monomial>:<label>"``; the even monomials
    tensored with the even basis come first.

    Args:
        a (SuperAlgebra): A graded superalgebra.
        n (int): Number of Grassmann generators, at least 1.

    Returns:
        SuperAlgebra: A purely even algebra of dimension 2^(n-1)·dim(a).

    Raises:
        UngradedError: If a product leaves the envelope, i.e. `a` is not graded.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"Envelope degree must be a positive integer, got {n}")
    grassmann = make_grassmann(n)
    pairs = [
        (g, u)
        for g in range(grassmann.dim)
        for u in range(a.dim)
        if grassmann.parity(g) == a.parity(u)
    ]
    pairs.sort(key=lambda pair: (a.parity(pair[1]), pair[0], pair[1]))
    position = {pair: index for index, pair in enumerate(pairs)}
    entries = []
    for (g, u), left in position.items():
        for (h, v), right in position.items():
            monomials = grassmann.sparse_product(g, h)
            if not monomials:
                continue
            (m, sign), = monomials
            for k, c in a.sparse_product(u, v):
                target = position.get((m, k))
                if target is None:
                    raise UngradedError(
                        f"{a.labels[u]}*{a.labels[v]} has a component on"
                        f" {a.labels[k]} of the wrong parity"
                    )
                entries.append((left, right, target, sign * c))
    labels = [f"{grassmann.labels[g]}:{a.labels[u]}" for g, u in pairs]
    return SuperAlgebra(
        f"G{n}({a.name})", len(pairs), 0, labels, entries, implicit_zero_rows=True
    )


def check_envelope_jordan(
    a: SuperAlgebra,
    n: int = 3,
    trials: int = 200,
    seed: int = 1,
    jobs: int = 1,
) -> IdentityReport:
    """
    Checks that the Grassmann envelope G(a, n) is a Jordan algebra:
    commutativity exhaustively on basis pairs, and (x²y)x = x²(yx) on
    `trials` seeded random pairs x, y with coordinates in [-3, 3].

    Trial k draws from ``SeededSampler(seed).split(k)``, so the verdict
    does not depend on `jobs`. An ungraded `a` has no envelope; its
    grading violations come back as the witnesses of a failed report.

    Args:
        a (SuperAlgebra): The superalgebra.
        n (int): Envelope degree, 1..4.
        trials (int): Number of random pairs.
        seed (int): Sampler seed.
        jobs (int): Worker threads.

    Returns:
        IdentityReport: Pair witnesses carry envelope basis indices. Trial
            witnesses are keyed ``(dim + k,)``, after every pair, and
            labelled ``"trial k"``.
    """
    if not 1 <= n <= MAX_ENVELOPE_DEGREE:
        raise ValueError(
            f"Envelope degree must be in 1..{MAX_ENVELOPE_DEGREE}, got {n}"
        )
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    grading = check_grading(a)
    if not grading.passed:
        logger.debug("envelope G%d(%s): algebra is not graded", n, a.name)
        return IdentityReport.from_witnesses(
            "envelope-jordan",
            grading.witnesses,
            grading.checked,
            degree=n,
            seed=seed,
            trials=trials,
            reason="ungraded",
        )
    envelope = grassmann_envelope(a, n)
    dim = envelope.dim
    witnesses = []
    for i in range(dim):
        for j in range(i + 1, dim):
            forward = envelope.product_coords(i, j)
            backward = envelope.product_coords(j, i)
            if forward != backward:
                defect = tuple(p - q for p, q in zip(forward, backward))
                witnesses.append(Witness((i, j), envelope.element(defect)))

    root = SeededSampler(seed)

    def trial(k: int) -> list[Witness]:
        sampler = root.split(k)
        x = sampler.vector(dim)
        y = sampler.vector(dim)
        square = envelope.multiply_coords(x, x)
        left = envelope.multiply_coords(envelope.multiply_coords(square, y), x)
        right = envelope.multiply_coords(square, envelope.multiply_coords(y, x))
        defect = tuple(p - q for p, q in zip(left, right))
        if any(defect):
            return [Witness((dim + k,), envelope.element(defect), label=f"trial {k}")]
        return []

    chunks = parallel_map(trial, range(trials), jobs)
    witnesses += [w for chunk in chunks for w in chunk]
    checked = dim * (dim - 1) // 2 + trials
    logger.debug("envelope G%d(%s): dim %d, %d trials", n, a.name, dim, trials)
    return IdentityReport.from_witnesses(
        "envelope-jordan", witnesses, checked, degree=n, seed=seed, trials=trials
    )