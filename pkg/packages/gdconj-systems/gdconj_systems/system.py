from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from gdconj_maps import AffineMap, CheckReport, ExprMap, LFMap, Map, MapError, Matrix2, Number, same_map
from gdconj_maps.config import settings as map_settings
from gdconj_systems.errors import CompatibilityError

logger = logging.getLogger(__name__)

VERTICES = (0, 1)

IntMatrix = tuple[int, int, int, int]


@dataclass(frozen=True)
class System:
    """Four maps h[i][j] on [0,1] indexed by the edges of the complete two-vertex digraph."""

    maps: tuple[tuple[Map, Map], tuple[Map, Map]]
    label: str = ""

    def __post_init__(self) -> None:
        if len(self.maps) != 2 or any(len(row) != 2 for row in self.maps):
            raise ValueError("a system needs exactly four maps in a 2x2 layout")
        object.__setattr__(self, "maps", (tuple(self.maps[0]), tuple(self.maps[1])))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Map]], label: str = "") -> "System":
        return cls(maps=((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1])), label=label)

    def map(self, i: int, j: int) -> Map:
        return self.maps[i][j]

    def edges(self) -> Iterator[tuple[int, int, Map]]:
        for i in VERTICES:
            for j in VERTICES:
                yield i, j, self.maps[i][j]

    @cached_property
    def is_projective(self) -> bool:
        return all(m.is_projective for _, _, m in self.edges())

    @cached_property
    def is_affine(self) -> bool:
        return all(isinstance(m, AffineMap) for _, _, m in self.edges())

    @cached_property
    def int_matrices(self) -> dict[tuple[int, int], IntMatrix]:
        if not self.is_projective:
            raise ValueError(f"system {self.label} has non-projective maps")
        out: dict[tuple[int, int], IntMatrix] = {}
        for i, j, m in self.edges():
            mat = m.matrix()
            assert mat is not None
            out[(i, j)] = mat.projective()
        return out

    def int_matrix(self, i: int, j: int) -> IntMatrix:
        return self.int_matrices[(i, j)]

    @cached_property
    def report(self) -> CheckReport:
        return validate_compatibility(self)

    @property
    def valid(self) -> bool:
        return self.report.ok

    def require_valid(self) -> "System":
        if not self.report.ok:
            raise CompatibilityError(self.label, self.report.violations)
        return self

    def describe(self) -> dict[str, str]:
        return {f"{i}{j}": m.describe() for i, j, m in self.edges()}


@dataclass(frozen=True)
class SystemPair:
    f: System
    g: System
    label: str = ""

    @cached_property
    def coincide(self) -> bool:
        return all(same_map(self.f.map(i, j), self.g.map(i, j)) for i in VERTICES for j in VERTICES)

    @property
    def valid(self) -> bool:
        return self.f.valid and self.g.valid

    def require_valid(self) -> "SystemPair":
        self.f.require_valid()
        self.g.require_valid()
        return self


def validate_compatibility(system: System) -> CheckReport:
    """Exact for projective maps, within the expression tolerance otherwise."""
    violations: list[str] = []
    notes: list[str] = []
    tol = map_settings.expr_tolerance
    for i in VERTICES:
        h0, h1 = system.map(i, 0), system.map(i, 1)
        exact = h0.is_projective and h1.is_projective
        zero, one = (Fraction(0), Fraction(1)) if exact else (0.0, 1.0)
        start, mid_left = h0.evaluate(zero), h0.evaluate(one)
        mid_right, end = h1.evaluate(zero), h1.evaluate(one)
        if not _close(start, 0, exact, tol):
            violations.append(f"h[{i}][0](0) = {start} != 0")
        if not _close(mid_left, mid_right, exact, tol):
            violations.append(f"h[{i}][0](1) = {mid_left} != h[{i}][1](0) = {mid_right}")
        if not _close(end, 1, exact, tol):
            violations.append(f"h[{i}][1](1) = {end} != 1")
        if not 0 < mid_left < 1:
            violations.append(f"junction h[{i}][0](1) = {mid_left} is not inside (0,1)")

    grid = np.linspace(0.0, 1.0, map_settings.validation_grid)
    for i, j, m in system.edges():
        try:
            increasing = bool(np.all(np.diff(m.evaluate_array(grid)) > 0))
            norm = m.lipschitz()
        except MapError as exc:
            violations.append(f"h[{i}][{j}] cannot be checked: {exc}")
            continue
        if not increasing:
            violations.append(f"h[{i}][{j}] is not strictly increasing on the grid")
        if float(norm.value) > 1 + (1e-9 if norm.estimated else 0):
            violations.append(f"h[{i}][{j}] has Lipschitz norm {float(norm.value):.6g} > 1")
        if isinstance(m, ExprMap):
            notes.append(f"h[{i}][{j}] is assumed weakly contracting")

    report = CheckReport.from_violations(violations, notes)
    if not report.ok:
        logger.info("Compatibility check failed", extra={"system": system.label, "violations": violations})
    return report


def dyadic_system(label: str = "dyadic") -> System:
    return affine_system(Fraction(1, 2), Fraction(1, 2), label=label)


def affine_system(p0: Number | str, p1: Number | str, label: str = "") -> System:
    """Standard affine system with junctions p0 at vertex 0 and p1 at vertex 1."""
    rows = []
    for p in (p0, p1):
        lo = AffineMap(p, Fraction(0))
        rows.append((lo, AffineMap(1 - lo.slope, lo.slope)))
    return System.from_rows(rows, label=label)


def lf_system(matrices: Sequence[Sequence[Matrix2]], label: str = "") -> System:
    return System.from_rows([[LFMap(matrices[i][j]) for j in VERTICES] for i in VERTICES], label=label)


def is_dyadic(system: System) -> bool:
    if not system.is_projective:
        return False
    dyadic = dyadic_system()
    return all(same_map(system.map(i, j), dyadic.map(i, j)) for i in VERTICES for j in VERTICES)


# ----- Helpers -----


def _close(left: Number | int, right: Number | int, exact: bool, tol: float) -> bool:
    if exact:
        return left == right
    return abs(float(left) - float(right)) <= tol
