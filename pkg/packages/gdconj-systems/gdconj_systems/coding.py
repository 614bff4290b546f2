"""Interval coding of [0,1] by the itineraries of a compatible system.

A cylinder I_i(j1..jn) is the image of [0,1] under h[i][j1] o h[j1][j2] o ...
Projective systems keep the composite as a primitive integer matrix, so every
cylinder end and split point is an exact rational. Systems with expression
maps fall back to float composition.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from gdconj_maps import MapDomainError, Number
from gdconj_systems.enclosure import Enclosure
from gdconj_systems.config import settings
from gdconj_systems.errors import DepthLimitError, ItineraryError
from gdconj_systems.system import VERTICES, IntMatrix, System


@dataclass(frozen=True)
class Itinerary:
    start: int
    digits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.start not in VERTICES:
            raise ItineraryError(f"start vertex must be 0 or 1, got {self.start}")
        if any(d not in VERTICES for d in self.digits):
            raise ItineraryError(f"digits must be 0 or 1, got {self.digits}")
        object.__setattr__(self, "digits", tuple(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def extend(self, digit: int) -> "Itinerary":
        return Itinerary(self.start, self.digits + (digit,))

    def prefix(self, n: int) -> "Itinerary":
        return Itinerary(self.start, self.digits[:n])

    def __str__(self) -> str:
        return f"{self.start}:" + "".join(str(d) for d in self.digits)


@dataclass(frozen=True)
class Cylinder:
    """Cylinder ends, exact for projective systems."""

    lo: Number
    hi: Number

    @property
    def width(self) -> Number:
        return self.hi - self.lo

    def contains(self, x: Number | int) -> bool:
        return self.lo <= x <= self.hi

    def within(self, other: "Cylinder") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def enclosure(self) -> Enclosure:
        return Enclosure.of(self.lo, self.hi)


# ----- Chains -----


class Chain(ABC):
    """Composite of the maps along an itinerary prefix, ending at `vertex`."""

    vertex: int

    @abstractmethod
    def extend(self, digit: int) -> "Chain":
        ...

    @abstractmethod
    def bounds(self) -> tuple[Number, Number]:
        ...

    @abstractmethod
    def width(self) -> Number:
        ...

    @abstractmethod
    def split(self) -> Number:
        """Common end of the two child cylinders."""

    @abstractmethod
    def coerce(self, x: Number | int) -> Number:
        ...

    def child(self, x: Number, prefer: int = 0) -> int:
        s = self.split()
        if prefer == 1:
            return 1 if x >= s else 0
        return 0 if x <= s else 1


class ProjectiveChain(Chain):
    def __init__(self, system: System, vertex: int, matrix: IntMatrix = (1, 0, 0, 1)) -> None:
        self.system = system
        self.vertex = vertex
        self.matrix = matrix

    def extend(self, digit: int) -> "ProjectiveChain":
        return ProjectiveChain(self.system, digit, _mul(self.matrix, self.system.int_matrix(self.vertex, digit)))

    def bounds(self) -> tuple[Fraction, Fraction]:
        a, b, c, d = self.matrix
        return Fraction(b, d), Fraction(a + b, c + d)

    def width(self) -> Fraction:
        a, b, c, d = self.matrix
        return Fraction(a * d - b * c, d * (c + d))

    def split(self) -> Fraction:
        a, b, c, d = _mul(self.matrix, self.system.int_matrix(self.vertex, 0))
        return Fraction(a + b, c + d)

    def coerce(self, x: Number | int) -> Fraction:
        return Fraction(x)


class NumericChain(Chain):
    def __init__(self, system: System, vertex: int, edges: tuple[tuple[int, int], ...] = ()) -> None:
        self.system = system
        self.vertex = vertex
        self.edges = edges

    def _apply(self, y: float) -> float:
        for i, j in reversed(self.edges):
            y = float(self.system.map(i, j).evaluate(y))
        return y

    def extend(self, digit: int) -> "NumericChain":
        return NumericChain(self.system, digit, self.edges + ((self.vertex, digit),))

    def bounds(self) -> tuple[float, float]:
        return self._apply(0.0), self._apply(1.0)

    def width(self) -> float:
        lo, hi = self.bounds()
        return max(hi - lo, 0.0)

    def split(self) -> float:
        return self._apply(float(self.system.map(self.vertex, 0).evaluate(1.0)))

    def coerce(self, x: Number | int) -> float:
        return float(x)


def chain(system: System, start: int) -> Chain:
    if start not in VERTICES:
        raise ItineraryError(f"start vertex must be 0 or 1, got {start}")
    if system.is_projective:
        return ProjectiveChain(system, start)
    return NumericChain(system, start)


def walk(system: System, itinerary: Itinerary) -> Chain:
    c = chain(system, itinerary.start)
    for digit in itinerary.digits:
        c = c.extend(digit)
    return c


def descend(system: System, start: int, x: Number | int, prefer: int = 0) -> Iterator[tuple[int, Chain]]:
    """Yield (digit, chain) pairs of the cylinders containing x, shallowest first."""
    _check_point(x)
    c = chain(system, start)
    xv = c.coerce(x)
    while True:
        digit = c.child(xv, prefer)
        c = c.extend(digit)
        yield digit, c


# ----- Operations -----


def interval(system: System, itinerary: Itinerary) -> Cylinder:
    system.require_valid()
    if len(itinerary) == 0:
        raise ItineraryError("an interval query needs at least one digit")
    lo, hi = walk(system, itinerary).bounds()
    return Cylinder(lo, hi)


def itinerary_of(system: System, start: int, x: Number | int, depth: int, prefer: int = 0) -> Itinerary:
    system.require_valid()
    _check_depth(depth, settings.max_descent_depth)
    if prefer not in VERTICES:
        raise ItineraryError("prefer must be 0 or 1")
    digits: list[int] = []
    for digit, _ in descend(system, start, x, prefer):
        digits.append(digit)
        if len(digits) == depth:
            break
    return Itinerary(start, tuple(digits))


def delta(system: System, start: int, depth: int) -> Number:
    """Largest length of a depth-n cylinder at `start`.

    Exact when the system is affine (via the slope recursion) or projective up
    to the exact-depth threshold; float beyond that.
    """
    system.require_valid()
    _check_depth(depth, settings.max_delta_depth)
    if start not in VERTICES:
        raise ItineraryError(f"start vertex must be 0 or 1, got {start}")
    if system.is_projective and all(system.int_matrix(i, j)[2] == 0 for i in VERTICES for j in VERTICES):
        return _affine_delta(system, start, depth)
    if system.is_projective and depth <= settings.exact_delta_depth:
        nums, dens = _projective_levels(system, depth)[start]
        gaps_num = nums[1:] * dens[:-1] - nums[:-1] * dens[1:]
        gaps_den = dens[1:] * dens[:-1]
        return max(Fraction(int(n), int(d)) for n, d in zip(gaps_num, gaps_den))
    points = breakpoints(system, start, depth)
    return float(np.max(np.diff(points)))


def breakpoints(system: System, start: int, depth: int) -> np.ndarray:
    """Sorted ends of all depth-n cylinders at `start` (2^n + 1 floats)."""
    system.require_valid()
    _check_depth(depth, settings.max_delta_depth)
    if system.is_projective and depth <= settings.exact_curve_depth:
        nums, dens = _projective_levels(system, depth)[start]
        return (nums / dens).astype(float)
    return _float_levels(system, depth, start)


def exact_breakpoints(system: System, start: int, depth: int) -> list[Fraction]:
    system.require_valid()
    _check_depth(depth, settings.exact_delta_depth)
    if not system.is_projective:
        raise ValueError(f"system {system.label} has non-projective maps")
    nums, dens = _projective_levels(system, depth)[start]
    return [Fraction(int(n), int(d)) for n, d in zip(nums, dens)]


# ----- Helpers -----


def _mul(m: IntMatrix, n: IntMatrix) -> IntMatrix:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _check_point(x: Number | int) -> None:
    if isinstance(x, bool) or not (0 <= x <= 1):
        raise MapDomainError(f"x={x} lies outside [0,1]")


def _check_depth(depth: int, cap: int) -> None:
    if depth < 1:
        raise ItineraryError(f"depth must be at least 1, got {depth}")
    if depth > cap:
        raise DepthLimitError(f"depth {depth} exceeds the limit {cap}")


def _affine_delta(system: System, start: int, depth: int) -> Fraction:
    slopes = {}
    for i in VERTICES:
        for j in VERTICES:
            a, _, _, d = system.int_matrix(i, j)
            slopes[(i, j)] = Fraction(a, d)
    longest = {0: Fraction(1), 1: Fraction(1)}
    for _ in range(depth):
        longest = {i: max(slopes[(i, j)] * longest[j] for j in VERTICES) for i in VERTICES}
    return longest[start]


def _projective_levels(system: System, depth: int) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """Homogeneous (num, den) integer pairs of the breakpoints at both vertices."""
    base = (np.array([0, 1], dtype=object), np.array([1, 1], dtype=object))
    levels = {0: base, 1: base}
    for _ in range(depth):
        step = {}
        for i in VERTICES:
            nums, dens = [], []
            for j in VERTICES:
                a, b, c, d = system.int_matrix(i, j)
                src_n, src_d = levels[j]
                n = a * src_n + b * src_d
                m = c * src_n + d * src_d
                if j == 1:
                    n, m = n[1:], m[1:]
                nums.append(n)
                dens.append(m)
            step[i] = (np.concatenate(nums), np.concatenate(dens))
        levels = step
    return levels


def _float_levels(system: System, depth: int, start: int) -> np.ndarray:
    """Breakpoints at `start`; the last level is built for that vertex only."""

    def level(i: int, below: dict[int, np.ndarray]) -> np.ndarray:
        return np.concatenate([system.map(i, 0).evaluate_array(below[0]), system.map(i, 1).evaluate_array(below[1])[1:]])

    base = np.array([0.0, 1.0])
    levels = {0: base, 1: base}
    for _ in range(depth - 1):
        levels = {i: level(i, levels) for i in VERTICES}
    return level(start, levels)
