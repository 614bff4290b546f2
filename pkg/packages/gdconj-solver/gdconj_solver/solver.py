"""Evaluate the conjugacy pair (phi_0, phi_1) carrying f-cylinders onto g-cylinders.

phi_i sends the f-cylinder of every itinerary starting at i onto the g-cylinder
of the same itinerary, so descending both codings in lockstep encloses phi_i(x).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from gdconj_maps import MapDomainError, Number, is_exact
from gdconj_solver.config import settings
from gdconj_systems import (
    VERTICES,
    DepthLimitError,
    Enclosure,
    Itinerary,
    SystemPair,
    breakpoints,
    chain,
    descend,
)
from gdconj_systems.config import settings as system_settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhiValue:
    enclosure: Enclosure
    depth_used: int
    itinerary: Itinerary
    converged: bool = True
    exact: Number | None = None

    @property
    def value(self) -> Number:
        return self.exact if self.exact is not None else self.enclosure.midpoint


@dataclass(frozen=True, eq=False)
class CurveSample:
    vertex: int
    xs: np.ndarray
    ys: np.ndarray

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.xs.tolist(), self.ys.tolist()))

    def __len__(self) -> int:
        return len(self.xs)


def solve_phi(
    pair: SystemPair,
    i: int,
    x: Number | int,
    tol: float | None = None,
    *,
    prefer: int = 0,
    exact_endpoints: bool = True,
    max_depth: int | None = None,
) -> PhiValue:
    """Enclose phi_i(x) to within `tol`.

    When x hits an end of an f-cylinder the matching g-cylinder end is returned
    exactly; with exact_endpoints=False the descent always runs to `tol`.
    """
    pair.require_valid()
    tol = settings.default_tol if tol is None else tol
    if not tol > 0:
        raise ValueError("tol must be positive")
    if i not in VERTICES:
        raise ValueError(f"vertex must be 0 or 1, got {i}")
    if isinstance(x, bool) or not (0 <= x <= 1):
        raise MapDomainError(f"x={x} lies outside [0,1]")
    max_depth = system_settings.max_descent_depth if max_depth is None else max_depth

    if pair.coincide:
        value = Fraction(x) if is_exact(x) else float(x)
        return PhiValue(Enclosure.point(value), 0, Itinerary(i), exact=value)
    if x == 0 or x == 1:
        value = Fraction(x) if pair.g.is_projective else float(x)
        return PhiValue(Enclosure.point(value), 0, Itinerary(i), exact=value)

    g_chain = chain(pair.g, i)
    digits: list[int] = []
    xv = chain(pair.f, i).coerce(x)
    g_lo: Number = 0
    g_hi: Number = 1
    for digit, f_chain in descend(pair.f, i, x, prefer):
        digits.append(digit)
        g_chain = g_chain.extend(digit)
        g_lo, g_hi = g_chain.bounds()
        if exact_endpoints:
            f_lo, f_hi = f_chain.bounds()
            if xv == f_lo or xv == f_hi:
                value = g_lo if xv == f_lo else g_hi
                return PhiValue(Enclosure.point(value), len(digits), Itinerary(i, tuple(digits)), exact=value)
        if g_chain.width() <= tol:
            return PhiValue(Enclosure.of(g_lo, g_hi), len(digits), Itinerary(i, tuple(digits)))
        if len(digits) >= max_depth:
            break

    logger.warning(
        "Descent stopped before reaching tolerance",
        extra={"vertex": i, "x": float(x), "depth": len(digits), "width": float(g_hi) - float(g_lo), "tol": tol},
    )
    return PhiValue(Enclosure.of(g_lo, g_hi), len(digits), Itinerary(i, tuple(digits)), converged=False)


def sample_curve(pair: SystemPair, i: int, depth: int) -> CurveSample:
    """Graph points (f-breakpoint, g-breakpoint) of phi_i at depth n."""
    pair.require_valid()
    if depth > settings.max_curve_depth:
        raise DepthLimitError(f"curve depth {depth} exceeds the limit {settings.max_curve_depth}")
    return CurveSample(vertex=i, xs=breakpoints(pair.f, i, depth), ys=breakpoints(pair.g, i, depth))


def residual_max(pair: SystemPair, m: int, tol: float | None = None) -> float:
    """Largest |g_ij(phi_j(x)) - phi_i(f_ij(x))| over the uniform grid of m points."""
    pair.require_valid()
    if m < 2:
        raise ValueError("the residual grid needs at least two points")
    tol = settings.default_tol if tol is None else tol
    exact_grid = pair.f.is_projective
    worst = 0.0
    stalled = 0
    for k in range(m):
        x: Number = Fraction(k, m - 1) if exact_grid else k / (m - 1)
        phi_x = {j: solve_phi(pair, j, x, tol) for j in VERTICES}
        for i in VERTICES:
            for j in VERTICES:
                lhs = pair.g.map(i, j).evaluate(phi_x[j].value)
                rhs = solve_phi(pair, i, pair.f.map(i, j).evaluate(x), tol)
                stalled += (not rhs.converged) + (not phi_x[j].converged)
                worst = max(worst, abs(float(lhs - rhs.value)))
    if stalled:
        logger.warning("Residual used unconverged values", extra={"count": stalled, "grid": m})
    return worst


def graph_operator_check(pair: SystemPair, depth: int) -> float:
    """Distance from T(K) to K for the depth-n sampled graphs K.

    T sends a point (x, y) of K_j to (f_ij(x), g_ij(y)), which must land on K_i.
    The distance is bounded by the longest f-cylinder at that depth.
    """
    pair.require_valid()
    if depth > settings.max_operator_depth:
        raise DepthLimitError(f"operator depth {depth} exceeds the limit {settings.max_operator_depth}")
    samples = {v: sample_curve(pair, v, depth) for v in VERTICES}
    worst = 0.0
    for i in VERTICES:
        target = samples[i]
        for j in VERTICES:
            source = samples[j]
            tx = pair.f.map(i, j).evaluate_array(source.xs)
            ty = pair.g.map(i, j).evaluate_array(source.ys)
            worst = max(worst, _polyline_distance(tx, ty, target.xs, target.ys))
    return worst


# ----- Helpers -----


def _polyline_distance(px: np.ndarray, py: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> float:
    """Largest distance from the points (px, py) to the polyline through (xs, ys)."""
    last = len(xs) - 2
    idx = np.clip(np.searchsorted(xs, px, side="right") - 1, 0, last)
    best = np.full(px.shape, np.inf)
    for offset in (-1, 0, 1):
        k = np.clip(idx + offset, 0, last)
        ax, ay = xs[k], ys[k]
        dx, dy = xs[k + 1] - ax, ys[k + 1] - ay
        seg = dx * dx + dy * dy
        safe = np.where(seg > 0, seg, 1.0)
        t = np.clip(np.where(seg > 0, ((px - ax) * dx + (py - ay) * dy) / safe, 0.0), 0.0, 1.0)
        best = np.minimum(best, np.hypot(px - (ax + t * dx), py - (ay + t * dy)))
    return float(best.max())
