from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, ClassVar

import numpy as np

from gdconj_maps.config import settings
from gdconj_maps.errors import MapDomainError, MapError
from gdconj_maps.expr import Expr, compile_expr, parse_ast, pretty_expr
from gdconj_maps.matrix import CheckReport, Matrix2, Number, Rationalish, is_exact, parse_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LipschitzNorm:
    value: Number
    estimated: bool = False

    def __float__(self) -> float:
        return float(self.value)


class Map(ABC):
    kind: ClassVar[str]

    @abstractmethod
    def evaluate(self, x: Number | int) -> Number:
        ...

    @abstractmethod
    def evaluate_array(self, xs: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def lipschitz(self) -> LipschitzNorm:
        ...

    @abstractmethod
    def describe(self) -> str:
        ...

    def matrix(self) -> Matrix2 | None:
        return None

    @property
    def is_projective(self) -> bool:
        return self.matrix() is not None

    def __call__(self, x: Number | int) -> Number:
        return eval_map(self, x)


@dataclass(frozen=True)
class AffineMap(Map):
    slope: Fraction
    intercept: Fraction = Fraction(0)

    kind: ClassVar[str] = "affine"

    def __post_init__(self) -> None:
        slope = parse_rational(self.slope)
        intercept = parse_rational(self.intercept)
        if slope <= 0:
            raise MapError(f"affine slope must be positive, got {slope}")
        if intercept < 0 or slope + intercept > 1:
            raise MapError(f"affine map x -> {slope}x + {intercept} does not send [0,1] into [0,1]")
        object.__setattr__(self, "slope", slope)
        object.__setattr__(self, "intercept", intercept)

    def evaluate(self, x: Number | int) -> Number:
        if is_exact(x):
            return self.slope * Fraction(x) + self.intercept
        return float(self.slope) * float(x) + float(self.intercept)

    def evaluate_array(self, xs: np.ndarray) -> np.ndarray:
        return float(self.slope) * np.asarray(xs, dtype=float) + float(self.intercept)

    def lipschitz(self) -> LipschitzNorm:
        return LipschitzNorm(self.slope)

    def matrix(self) -> Matrix2:
        return Matrix2.of(self.slope, self.intercept, 0, 1)

    def describe(self) -> str:
        return self.matrix().format_lf()


@dataclass(frozen=True)
class LFMap(Map):
    """x -> (a x + b)/(c x + d) with the matrix restricted to the class M."""

    mat: Matrix2

    kind: ClassVar[str] = "lf"

    def __post_init__(self) -> None:
        report = validate_class_M(self.mat)
        if not report.ok:
            raise MapError(f"matrix {self.mat} is outside the class M: {'; '.join(report.violations)}")

    @classmethod
    def of(cls, a: Rationalish, b: Rationalish, c: Rationalish, d: Rationalish) -> "LFMap":
        return cls(Matrix2.of(a, b, c, d))

    def evaluate(self, x: Number | int) -> Number:
        return self.mat.phi(x)

    def evaluate_array(self, xs: np.ndarray) -> np.ndarray:
        a, b, c, d = (float(v) for v in self.mat.entries())
        xs = np.asarray(xs, dtype=float)
        return (a * xs + b) / (c * xs + d)

    def lipschitz(self) -> LipschitzNorm:
        m = self.mat
        return LipschitzNorm(m.det / min(m.d, m.c + m.d) ** 2)

    def matrix(self) -> Matrix2:
        return self.mat

    def describe(self) -> str:
        return self.mat.format_lf()


@dataclass(frozen=True)
class ExprMap(Map):
    source: str
    expr: Expr
    declared_lip: Fraction | None = None
    _fn: Callable[[Any], Any] = field(init=False, repr=False, compare=False)

    kind: ClassVar[str] = "expr"

    def __post_init__(self) -> None:
        if self.declared_lip is not None:
            lip = parse_rational(self.declared_lip)
            if lip <= 0:
                raise MapError("declared Lipschitz bound must be positive")
            object.__setattr__(self, "declared_lip", lip)
        object.__setattr__(self, "_fn", compile_expr(self.expr))
        self._validate_on_grid()

    def _validate_on_grid(self) -> None:
        grid = np.linspace(0.0, 1.0, settings.validation_grid)
        values = self._safe_array(grid)
        tol = settings.expr_tolerance
        if not np.all(np.isfinite(values)):
            raise MapError(f"{self.source!r} is not finite on [0,1]")
        if values.min() < -tol or values.max() > 1 + tol:
            raise MapError(f"{self.source!r} does not map [0,1] into [0,1]")
        if not np.all(np.diff(values) > 0):
            raise MapError(f"{self.source!r} is not strictly increasing on [0,1]")
        if self.declared_lip is not None:
            estimate = _estimate_lipschitz(self)
            if float(self.declared_lip) < estimate - 1e-9:
                raise MapError(
                    f"declared Lipschitz bound {self.declared_lip} of {self.source!r} "
                    f"is below the grid estimate {estimate:.6g}"
                )

    def _safe_array(self, xs: np.ndarray) -> np.ndarray:
        try:
            out = self._fn(np.asarray(xs, dtype=float))
        except (ZeroDivisionError, OverflowError) as exc:
            raise MapDomainError(f"{self.source!r}: {exc}") from exc
        return np.broadcast_to(np.asarray(out, dtype=float), np.shape(xs)).copy()

    def evaluate(self, x: Number | int) -> Number:
        if is_exact(x):
            value = self.expr.exact(Fraction(x))
            if value is not None:
                return value
        try:
            return float(self._fn(float(x)))
        except (ZeroDivisionError, OverflowError) as exc:
            raise MapDomainError(f"{self.source!r}: {exc}") from exc

    def evaluate_array(self, xs: np.ndarray) -> np.ndarray:
        return self._safe_array(xs)

    def lipschitz(self) -> LipschitzNorm:
        if self.declared_lip is not None:
            return LipschitzNorm(self.declared_lip)
        estimate = _estimate_lipschitz(self)
        if not np.isfinite(estimate):
            raise MapError(f"no finite Lipschitz estimate for {self.source!r}")
        logger.warning("Estimated Lipschitz norm", extra={"expr": self.source, "estimate": estimate})
        return LipschitzNorm(estimate, estimated=True)

    def describe(self) -> str:
        return pretty_expr(self.expr)


def parse_expr(source: str, declared_lip: Rationalish | None = None) -> ExprMap:
    lip = None if declared_lip is None else parse_rational(declared_lip)
    return ExprMap(source=source, expr=parse_ast(source), declared_lip=lip)


def eval_map(m: Map, x: Number | int) -> Number:
    """Exact for projective maps (and rational-valued expressions) at rational x."""
    if isinstance(x, bool):
        raise MapDomainError("x must be a number")
    if not 0 <= x <= 1:
        raise MapDomainError(f"x={x} lies outside [0,1]")
    return m.evaluate(x)


def lipschitz_norm(m: Map) -> LipschitzNorm:
    return m.lipschitz()


def validate_class_M(mat: Matrix2) -> CheckReport:
    a, b, c, d = mat.entries()
    violations: list[str] = []
    if not a + b > 0:
        violations.append("a+b > 0 fails")
    if not a + b <= c + d:
        violations.append("a+b <= c+d fails")
    if not d > b:
        violations.append("d > b fails")
    if not b >= 0:
        violations.append("b >= 0 fails")
    if not mat.det > 0:
        violations.append("det > 0 fails")
    floor = min(d, c + d)
    if floor <= 0 or mat.det > floor**2:
        violations.append("det <= min(d, c+d)^2 fails")
    return CheckReport.from_violations(violations)


def same_map(left: Map, right: Map) -> bool:
    lm, rm = left.matrix(), right.matrix()
    if lm is not None and rm is not None:
        return lm.proportional_to(rm)
    if isinstance(left, ExprMap) and isinstance(right, ExprMap):
        return left.describe() == right.describe()
    return False


# ----- Helpers -----


def _estimate_lipschitz(m: ExprMap) -> float:
    xs = np.linspace(0.0, 1.0, settings.lipschitz_grid)
    h = settings.lipschitz_step
    hi = np.minimum(xs + h, 1.0)
    lo = np.maximum(xs - h, 0.0)
    slopes = (m.evaluate_array(hi) - m.evaluate_array(lo)) / (hi - lo)
    return float(np.max(np.abs(slopes)))
