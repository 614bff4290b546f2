from __future__ import annotations

from fractions import Fraction

from gdconj_maps import MapDomainError, Number, is_exact
from gdconj_solver import solve_phi
from gdconj_systems import SystemPair


def derivative_estimate(pair: SystemPair, i: int, x: Number | int, h: Number, tol: float | None = None) -> float:
    """Central difference of phi_i at x; phi values are solved to h^2/100 unless tol is given."""
    if not h > 0:
        raise ValueError("h must be positive")
    if is_exact(x) and is_exact(h):
        left, right = Fraction(x) - Fraction(h), Fraction(x) + Fraction(h)
    else:
        left, right = float(x) - float(h), float(x) + float(h)
    if left < 0 or right > 1:
        raise MapDomainError(f"[{left}, {right}] leaves [0,1]")
    tol = float(h) ** 2 * 1e-2 if tol is None else tol
    upper = solve_phi(pair, i, right, tol).value
    lower = solve_phi(pair, i, left, tol).value
    return float(upper - lower) / (2 * float(h))
