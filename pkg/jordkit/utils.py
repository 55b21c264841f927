from __future__ import annotations

import re
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import isqrt
from typing import Optional, TypeVar, Union

from jordkit.errors import NonSquareScalar

Scalar = Fraction
"""Exact rational scalar. Fractions are always kept in lowest terms."""

ScalarLike = Union[Fraction, int, str]

T = TypeVar("T")
R = TypeVar("R")

_SCALAR_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


#  Scalars


def to_scalar(value: ScalarLike) -> Fraction:
    """
    Converts an int, a Fraction or a "p/q" string into a Fraction.

    Floats are refused: every coefficient in jordkit is exact.

    Args:
        value (ScalarLike): The value to convert.

    Returns:
        Fraction: The exact rational value.
    """
    if isinstance(value, bool):
        raise TypeError(f"Expected a rational scalar, got bool {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"Expected int, Fraction or 'p/q' string, got {type(value)}")


def parse_scalar(text: str) -> Fraction:
    """
    Parses the file-format spelling of a scalar, "p/q" or "p".

    Args:
        text (str): The string to parse.

    Returns:
        Fraction: The parsed value.
    """
    match = _SCALAR_PATTERN.match(text)
    if match is None:
        raise ValueError(f"Not a rational scalar: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"Zero denominator in scalar {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_scalar(value: Fraction) -> str:
    """
    Formats a scalar as "p/q", or "p" when the denominator is 1.
    """
    value = to_scalar(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def height(value: Fraction) -> int:
    """The height max(|p|, |q|) of p/q in lowest terms."""
    return max(abs(value.numerator), value.denominator)


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """
    Returns the non-negative rational square root of `value`, or None.

    Args:
        value (Fraction): The scalar.

    Returns:
        Optional[Fraction]: mu >= 0 with mu * mu == value, if one exists.
    """
    value = to_scalar(value)
    if value < 0:
        return None
    num_root = isqrt(value.numerator)
    den_root = isqrt(value.denominator)
    if num_root * num_root != value.numerator:
        return None
    if den_root * den_root != value.denominator:
        return None
    return Fraction(num_root, den_root)


def require_sqrt(value: Fraction) -> Fraction:
    """
    Like rational_sqrt, but raises NonSquareScalar when there is no root.
    """
    root = rational_sqrt(value)
    if root is None:
        raise NonSquareScalar(value)
    return root


#  Seeded randomness


class SeededSampler:
    """
    A small, fully specified pseudo-random source so that every randomized
    check is reproducible bit for bit, independent of the Python version.

    The state advances by the 64-bit linear congruential step
        state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64
    and each draw returns the top 31 bits of the new state.

    :ivar seed: The seed the sampler was created with.
    :vartype seed: int
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise TypeError(f"Seed must be an int, got {type(seed)}")
        self.seed = seed
        self._state = seed & self.MASK
        # Warm-up so that nearby seeds decorrelate.
        for _ in range(4):
            self._next()

    def _next(self) -> int:
        self._state = (self.MULTIPLIER * self._state + self.INCREMENT) & self.MASK
        return self._state >> 33

    def integer(self, low: int, high: int) -> int:
        """
        Draws an integer uniformly-ish from the closed range [low, high].
        """
        if high < low:
            raise ValueError(f"Empty range [{low}, {high}]")
        return low + self._next() % (high - low + 1)

    def coin(self) -> bool:
        return self.integer(0, 1) == 1

    def vector(self, length: int, bound: int = 3) -> list[Fraction]:
        """
        Draws a vector of small integer coordinates in [-bound, bound].
        """
        return [Fraction(self.integer(-bound, bound)) for _ in range(length)]

    def split(self, index: int) -> SeededSampler:
        """
        Derives an independent sampler for the task numbered `index`, so that
        parallel work draws the same numbers however it is scheduled.
        """
        mixed = (self.seed * 0x9E3779B97F4A7C15 + (index + 1) * 0xBF58476D1CE4E5B9)
        return SeededSampler(mixed & self.MASK)


#  Parallel sweeps


def parallel_map(
    worker: Callable[[T], R], tasks: Sequence[T], jobs: int = 1
) -> list[R]:
    """
    Applies `worker` to every task, on `jobs` threads when jobs > 1.

    Results come back in task order whatever the scheduling, so anything
    aggregated from them is independent of `jobs`.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    if jobs == 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))
