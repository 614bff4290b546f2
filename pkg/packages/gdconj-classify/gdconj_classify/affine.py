from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gdconj_classify.errors import ClassificationError
from gdconj_classify.verdict import Verdict, VerdictKind
from gdconj_maps import AffineMap
from gdconj_systems import VERTICES, System, SystemPair

THEOREM = "affine dichotomy"


@dataclass(frozen=True)
class AffineParams:
    """Junction points p_i of f and q_i of g; a compatible affine system is fixed by them."""

    p0: Fraction
    p1: Fraction
    q0: Fraction
    q1: Fraction

    def __post_init__(self) -> None:
        for name in ("p0", "p1", "q0", "q1"):
            value = Fraction(getattr(self, name))
            if not 0 < value < 1:
                raise ClassificationError(f"{name} must lie in (0,1), got {value}")
            object.__setattr__(self, name, value)


def _junctions(system: System) -> tuple[Fraction, Fraction]:
    out = []
    for i in VERTICES:
        m = system.map(i, 0)
        if not isinstance(m, AffineMap):
            raise ClassificationError(f"system {system.label} is not affine")
        out.append(m.slope)
    return out[0], out[1]


def affine_params(pair: SystemPair) -> AffineParams:
    pair.require_valid()
    if not (pair.f.is_affine and pair.g.is_affine):
        raise ClassificationError("both systems must be affine")
    p0, p1 = _junctions(pair.f)
    q0, q1 = _junctions(pair.g)
    return AffineParams(p0=p0, p1=p1, q0=q0, q1=q1)


def ratio_set(params: AffineParams) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Slope ratios of g over f on the four edges; phi is affine only if all equal 1."""
    return (
        params.q0 / params.p0,
        (1 - params.q0) / (1 - params.p0),
        params.q1 / params.p1,
        (1 - params.q1) / (1 - params.p1),
    )


def classify_affine(params: AffineParams) -> Verdict:
    ratios = ratio_set(params)
    details = {"p": [params.p0, params.p1], "q": [params.q0, params.q1], "ratios": list(ratios)}
    if params.p0 == params.q0 and params.p1 == params.q1:
        return Verdict(
            kind=VerdictKind.IDENTITY,
            theorem=THEOREM,
            evidence="p_i = q_i at both vertices, so the systems coincide and phi is the identity",
            details=details,
        )
    differing = [i for i, (p, q) in enumerate(((params.p0, params.q0), (params.p1, params.q1))) if p != q]
    return Verdict(
        kind=VerdictKind.SINGULAR,
        theorem=THEOREM,
        evidence=(
            f"p_i != q_i at vertex {', '.join(map(str, differing))}; "
            f"slope ratios {', '.join(str(r) for r in ratios)} are not all 1, so phi is singular"
        ),
        details=details,
    )
