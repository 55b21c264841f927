"""
errors.py

Typed exceptions raised by jordkit. Everything that signals a bad argument
derives from ValueError so callers can keep catching ValueError; the
subclasses exist where a caller has to tell cases apart.
"""
from __future__ import annotations

from fractions import Fraction


class DimensionMismatchError(ValueError):
    """Shapes or ambient dimensions of the operands do not agree."""


class SingularMatrixError(ValueError):
    """An inverse was requested for a singular matrix."""


class AlgebraMismatchError(ValueError):
    """Elements (or maps) over different superalgebras were combined."""


class TableError(ValueError):
    """A structure-constant table is malformed or incomplete."""


class UngradedError(ValueError):
    """The algebra violates A_α A_β ⊆ A_{α+β}."""


class NotSupercommutativeError(ValueError):
    """The algebra is not supercommutative."""


class NotAssociativeError(ValueError):
    """The algebra is not (graded) associative."""


class NotIsotropicError(ValueError):
    """A vector of W⊗W is not a pure tensor s⊗t."""


class NotOrthogonal(ValueError):
    """A map on W⊗W does not preserve the form b."""


class NonSquareScalar(ValueError):
    """
    A rational number without a rational square root was met where the
    construction needs one.

    Attributes:
        gamma (Fraction): The offending scalar.
    """

    def __init__(self, gamma: Fraction):
        self.gamma = Fraction(gamma)
        super().__init__(f"NonSquareScalar({self.gamma}): no rational square root")


class ReflectionDegenerateError(ValueError):
    """Every candidate reflection vector is isotropic."""


class VerificationError(RuntimeError):
    """
    A construction failed its own verification.

    Attributes:
        claim (str): Name of the claim that failed.
    """

    def __init__(self, claim: str, detail: str = ""):
        self.claim = claim
        self.detail = detail
        message = f"verification failed: {claim}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)
