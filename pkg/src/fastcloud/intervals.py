"""Closed-interval value type and the handful of operations the trust model needs.

Intervals are immutable; every operation returns a new value, so they are
safe to share across threads. Deliberately not a general interval-arithmetic
library: no interval-by-interval multiplication, division or containment
algebra, just scaling, addition, an L1-style separation and the possibility
degree used for ranking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class IntervalNumber:
    """Closed interval [lower, upper] with finite endpoints and lower <= upper."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        lower = float(self.lower)
        upper = float(self.upper)
        if not (math.isfinite(lower) and math.isfinite(upper)):
            raise ValueError(f"interval endpoints must be finite, got [{lower}, {upper}]")
        if lower > upper:
            raise ValueError(f"interval lower bound exceeds upper bound: [{lower}, {upper}]")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def intersects(self, other: "IntervalNumber") -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def __str__(self) -> str:
        return f"[{self.lower:g}, {self.upper:g}]"


def scale(x: IntervalNumber, c: float) -> IntervalNumber:
    """Multiply both endpoints by a nonnegative constant.

    Negative factors are rejected: they would flip the interval's polarity.
    """
    if c < 0:
        raise ValueError(f"scale factor must be nonnegative, got {c}")
    return IntervalNumber(c * x.lower, c * x.upper)


def add(x: IntervalNumber, y: IntervalNumber) -> IntervalNumber:
    """Endpoint-wise sum of two intervals."""
    return IntervalNumber(x.lower + y.lower, x.upper + y.upper)


def separation(x: IntervalNumber, y: IntervalNumber) -> float:
    """Distance |x.lower - y.lower| + |x.upper - y.upper|.

    A metric on intervals: nonnegative, symmetric, zero only for equal
    intervals, and satisfies the triangle inequality.
    """
    return abs(x.lower - y.lower) + abs(x.upper - y.upper)


def possibility_degree(a: IntervalNumber, b: IntervalNumber) -> float:
    """Degree in [0, 1] to which interval ``a`` is at least interval ``b``.

    For intervals with positive combined width:

        min(width(a) + width(b), max(a.upper - b.lower, 0)) / (width(a) + width(b))

    Two point intervals have zero combined width, which the formula leaves
    undefined; the convention here is strict comparison of the point values
    (1 if a > b, 0 if a < b, 0.5 if equal), which preserves the
    complementarity identity p(a, b) + p(b, a) = 1.
    """
    total_width = a.width + b.width
    if total_width == 0:
        if a.lower > b.lower:
            return 1.0
        if a.lower < b.lower:
            return 0.0
        return 0.5
    return min(total_width, max(a.upper - b.lower, 0.0)) / total_width
