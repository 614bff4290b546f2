"""Linear fractional g-systems over the dyadic f-system.

With a_{i0} = 1 and b_{i1} = 1 after scaling, each vertex carries one number
alpha_i. The conjugacy is smooth exactly when every transposed matrix sends
alpha_i to alpha_j under the Mobius action; then phi_i(x) = x/(1 + c_ii (1 - x)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gdconj_classify.errors import ClassificationError
from gdconj_classify.verdict import Verdict, VerdictKind
from gdconj_maps import CheckReport, Matrix2, Rationalish, parse_rational, validate_class_M
from gdconj_systems import VERTICES, System, SystemPair, dyadic_system, lf_system

THEOREM = "linear fractional transpose criterion"

Grid = tuple[tuple[Matrix2, Matrix2], tuple[Matrix2, Matrix2]]


@dataclass(frozen=True)
class LFSystemSpec:
    matrices: Grid

    def __post_init__(self) -> None:
        grid = (tuple(self.matrices[0]), tuple(self.matrices[1]))
        object.__setattr__(self, "matrices", grid)
        violations: list[str] = []
        for i in VERTICES:
            for j in VERTICES:
                report = validate_class_M(grid[i][j])
                violations += [f"A[{i}][{j}]: {v}" for v in report.violations]
        if violations:
            raise ClassificationError("; ".join(violations))
        for i in VERTICES:
            low, high = grid[i]
            if low.b != 0:
                violations.append(f"A[{i}][0] does not fix 0")
            if high.a + high.b != high.c + high.d:
                violations.append(f"A[{i}][1] does not fix 1")
            if low.a / (low.c + low.d) != high.b / high.d:
                violations.append(f"A[{i}][0] and A[{i}][1] disagree at the junction")
        if violations:
            raise ClassificationError("; ".join(violations))

    @classmethod
    def from_system(cls, system: System) -> "LFSystemSpec":
        rows = []
        for i in VERTICES:
            row = []
            for j in VERTICES:
                mat = system.map(i, j).matrix()
                if mat is None:
                    raise ClassificationError(f"h[{i}][{j}] of {system.label} is not linear fractional")
                row.append(mat)
            rows.append(tuple(row))
        return cls((rows[0], rows[1]))

    @classmethod
    def of(cls, rows: Sequence[Sequence[Matrix2]]) -> "LFSystemSpec":
        return cls(((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1])))

    def matrix(self, i: int, j: int) -> Matrix2:
        return self.matrices[i][j]

    def system(self, label: str = "") -> System:
        return lf_system(self.matrices, label=label)

    def pair(self, label: str = "") -> SystemPair:
        return SystemPair(dyadic_system(), self.system(label), label=label)


@dataclass(frozen=True)
class TransposeCheck:
    i: int
    j: int
    image: Fraction
    target: Fraction

    @property
    def holds(self) -> bool:
        return self.image == self.target


def normalized(spec: LFSystemSpec) -> LFSystemSpec:
    """Scale so that a_{i0} = 1 and b_{i1} = 1 (both are positive in the class M)."""
    rows = []
    for i in VERTICES:
        low, high = spec.matrix(i, 0), spec.matrix(i, 1)
        rows.append((low.scaled(1 / low.a), high.scaled(1 / high.b)))
    return LFSystemSpec.of(rows)


def alpha(spec: LFSystemSpec, i: int) -> Fraction:
    low, high = spec.matrix(i, 0), spec.matrix(i, 1)
    from_low = (low.c + low.d) / low.a - 2
    from_high = high.d / high.b - 2
    if from_low != from_high:
        raise ClassificationError(f"alpha_{i} is inconsistent: {from_low} != {from_high}")
    return from_low


def transpose_conditions(spec: LFSystemSpec) -> list[TransposeCheck]:
    alphas = {i: alpha(spec, i) for i in VERTICES}
    checks = []
    for i in VERTICES:
        for j in VERTICES:
            t = spec.matrix(i, j).transpose()
            if t.c * alphas[i] + t.d == 0:
                raise ClassificationError(f"transposed A[{i}][{j}] is singular at alpha_{i}")
            checks.append(TransposeCheck(i=i, j=j, image=t.phi(alphas[i]), target=alphas[j]))  # type: ignore[arg-type]
    return checks


def classify_lf(spec: LFSystemSpec) -> Verdict:
    checks = transpose_conditions(spec)
    alphas = [alpha(spec, i) for i in VERTICES]
    details = {
        "alpha": alphas,
        "conditions": [
            {"edge": f"{c.i}{c.j}", "image": c.image, "target": c.target, "holds": c.holds} for c in checks
        ],
    }
    failing = [c for c in checks if not c.holds]
    if failing:
        listing = ", ".join(f"A[{c.i}][{c.j}]^T sends alpha_{c.i} to {c.image} != alpha_{c.j} = {c.target}" for c in failing)
        return Verdict(kind=VerdictKind.SINGULAR, theorem=THEOREM, evidence=listing, details=details)

    unit = normalized(spec)
    c00, c11 = unit.matrix(0, 0).c, unit.matrix(1, 1).c
    forms = (Matrix2.of(1, 0, -c00, 1 + c00), Matrix2.of(1, 0, -c11, 1 + c11))
    if c00 == 0 and c11 == 0:
        kind_note = "the transposed matrices fix alpha and phi is the identity"
    else:
        kind_note = f"phi0(x) = {forms[0].format_lf()}, phi1(x) = {forms[1].format_lf()}"
    details["c00"], details["c11"] = c00, c11
    return Verdict(
        kind=VerdictKind.SMOOTH,
        theorem=THEOREM,
        evidence=f"all four transposed matrices carry alpha_i to alpha_j; {kind_note}",
        closed_forms=forms,
        details=details,
    )


# ----- Admissible region of the smooth family -----


def _sqrt2_sign(r: Fraction) -> int:
    """Sign of r - sqrt(2), decided exactly."""
    if r <= 0:
        return -1
    return 1 if r * r > 2 else -1


def admissible_region(c00: Rationalish, c11: Rationalish) -> CheckReport:
    c00, c11 = parse_rational(c00), parse_rational(c11)
    violations = []
    if _sqrt2_sign(c00 + 2) < 0:
        violations.append("c00 >= sqrt(2) - 2 fails")
    if _sqrt2_sign(c11) > 0:
        violations.append("c11 <= sqrt(2) fails")
    if not c00 <= 2 * c11 + 1:
        violations.append("c00 <= 2 c11 + 1 fails")
    if not 2 * (c00 + 1) * (c11 + 1) <= (c00 + 2) ** 2:
        violations.append("2 (c00 + 1)(c11 + 1) <= (c00 + 2)^2 fails")
    if not 2 * (c11 + 1) <= (c00 + 1) * (c11 + 2) ** 2:
        violations.append("2 (c11 + 1) <= (c00 + 1)(c11 + 2)^2 fails")
    return CheckReport.from_violations(violations)


def admissible_region_transformed(c00: Rationalish, c11t: Rationalish) -> CheckReport:
    """Same region in the coordinates (c00, -c11/(c11 + 1)), where it is symmetric."""
    c00, c11t = parse_rational(c00), parse_rational(c11t)
    violations = []
    if _sqrt2_sign(c00 + 2) < 0:
        violations.append("c00 >= sqrt(2) - 2 fails")
    if _sqrt2_sign(c11t + 2) < 0:
        violations.append("c11' >= sqrt(2) - 2 fails")
    if not (c00 + 1) * (c11t + 1) <= 2:
        violations.append("(c00 + 1)(c11' + 1) <= 2 fails")
    if c11t + 2 == 0 or not c00 >= 2 * (c11t + 1) / (c11t + 2) ** 2 - 1:
        violations.append("c00 >= 2 (c11' + 1)/(c11' + 2)^2 - 1 fails")
    if c00 + 2 == 0 or not c11t >= 2 * (c00 + 1) / (c00 + 2) ** 2 - 1:
        violations.append("c11' >= 2 (c00 + 1)/(c00 + 2)^2 - 1 fails")
    return CheckReport.from_violations(violations)


def involution_c(c: Rationalish) -> Fraction:
    c = parse_rational(c)
    if c == -1:
        raise ClassificationError("c = -1 has no image under c -> -c/(c + 1)")
    return -c / (c + 1)


def smooth_family_matrices(c00: Rationalish, c11: Rationalish) -> LFSystemSpec:
    """The normalized g-system whose conjugacy to the dyadic system is (phi0, phi1) with parameters c00, c11."""
    c00, c11 = parse_rational(c00), parse_rational(c11)
    if c00 == -1:
        raise ClassificationError("c00 = -1 is outside the family")
    region = admissible_region(c00, c11)
    if not region.ok:
        raise ClassificationError(f"({c00}, {c11}) is not admissible: {'; '.join(region.violations)}")
    return LFSystemSpec.of(
        [
            [
                Matrix2.of(1, 0, c00, 2),
                Matrix2.of(2 * c11 + 1, 1, 2 * c11 - c00, c00 + 2),
            ],
            [
                Matrix2.of(1, 0, (c00 * c11 + 2 * c00 - c11) / (c00 + 1), 2 * (c11 + 1) / (c00 + 1)),
                Matrix2.of(2 * c11 + 1, 1, c11, c11 + 2),
            ],
        ]
    )
