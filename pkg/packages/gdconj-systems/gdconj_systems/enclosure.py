from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from gdconj_maps import Number


def round_down(q: Number) -> float:
    f = float(q)
    if isinstance(q, Fraction) and Fraction(f) > q:
        f = math.nextafter(f, -math.inf)
    return f


def round_up(q: Number) -> float:
    f = float(q)
    if isinstance(q, Fraction) and Fraction(f) < q:
        f = math.nextafter(f, math.inf)
    return f


@dataclass(frozen=True)
class Enclosure:
    """Closed float interval [lo, hi] inside [0,1] that contains a real value."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lo <= self.hi <= 1.0):
            raise ValueError(f"invalid enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def of(cls, lo: Number, hi: Number) -> "Enclosure":
        """Outward-rounded enclosure of [lo, hi]; float ends are clamped to [0,1]."""
        low, high = round_down(lo), round_up(hi)
        if low > high:
            low, high = high, low
        return cls(min(max(low, 0.0), 1.0), min(max(high, 0.0), 1.0))

    @classmethod
    def point(cls, value: Number) -> "Enclosure":
        return cls.of(value, value)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return self.lo + (self.hi - self.lo) / 2

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def intersects(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi
