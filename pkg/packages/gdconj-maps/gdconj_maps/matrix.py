from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Union

from gdconj_maps.errors import MapError

Number = Union[Fraction, float]
Rationalish = Union[Fraction, int, float, str]


def parse_rational(value: object) -> Fraction:
    """Read "p/q", an integer, a decimal string or a finite float as an exact Fraction."""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"not a finite number: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-").replace(" ", "")
        if not text:
            raise ValueError("empty rational")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r}")


def is_exact(x: object) -> bool:
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    violations: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def from_violations(cls, violations: list[str], notes: list[str] | None = None) -> "CheckReport":
        return cls(ok=not violations, violations=tuple(violations), notes=tuple(notes or ()))


@dataclass(frozen=True)
class Matrix2:
    """Real 2x2 matrix (a, b; c, d) acting as x -> (a x + b) / (c x + d)."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for f in fields(self):
            object.__setattr__(self, f.name, parse_rational(getattr(self, f.name)))

    @classmethod
    def of(cls, a: Rationalish, b: Rationalish, c: Rationalish, d: Rationalish) -> "Matrix2":
        return cls(a, b, c, d)  # type: ignore[arg-type]

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls.of(1, 0, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def transpose(self) -> "Matrix2":
        return Matrix2(self.a, self.c, self.b, self.d)

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scaled(self, k: Rationalish) -> "Matrix2":
        k = parse_rational(k)
        if k == 0:
            raise MapError("cannot scale a matrix by zero")
        return Matrix2(self.a * k, self.b * k, self.c * k, self.d * k)

    def phi(self, x: Number | int) -> Number:
        """Apply the Mobius action. Exact for rational x, float otherwise."""
        if is_exact(x):
            xq = Fraction(x)
            den = self.c * xq + self.d
            if den == 0:
                raise MapError("denominator vanishes")
            return (self.a * xq + self.b) / den
        xf = float(x)
        den_f = float(self.c) * xf + float(self.d)
        if den_f == 0.0:
            raise MapError("denominator vanishes")
        return (float(self.a) * xf + float(self.b)) / den_f

    def projective(self) -> tuple[int, int, int, int]:
        """Primitive integer representative with the same sign pattern."""
        lcm = 1
        for v in self.entries():
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        ints = [int(v * lcm) for v in self.entries()]
        g = math.gcd(*ints)
        if g == 0:
            raise MapError("zero matrix has no projective class")
        return (ints[0] // g, ints[1] // g, ints[2] // g, ints[3] // g)

    def proportional_to(self, other: "Matrix2") -> bool:
        return self.projective() == other.projective()

    def format_lf(self, var: str = "x") -> str:
        a, b, c, d = self.projective()
        num = _linear(a, b, var)
        if c == 0 and d == 1:
            return num
        den = _linear(c, d, var)
        if _is_compound(num):
            num = f"({num})"
        if _is_compound(den):
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self) -> str:
        return f"({self.a}, {self.b}; {self.c}, {self.d})"


# ----- Helpers -----


def _coef(p: int, var: str) -> str:
    if p == 1:
        return var
    if p == -1:
        return f"-{var}"
    return f"{p}{var}"


def _linear(p: int, q: int, var: str) -> str:
    if p == 0:
        return str(q)
    if q == 0:
        return _coef(p, var)
    if p < 0 < q:
        return f"{q} - {_coef(-p, var)}"
    if q < 0:
        return f"{_coef(p, var)} - {-q}"
    return f"{_coef(p, var)} + {q}"


def _is_compound(text: str) -> bool:
    return " + " in text or " - " in text
