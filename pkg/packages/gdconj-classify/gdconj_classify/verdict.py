from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from gdconj_classify.errors import ClassificationError
from gdconj_maps import Matrix2


class VerdictKind(str, Enum):
    SINGULAR = "singular"
    SMOOTH = "smooth"
    IDENTITY = "identity"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    theorem: str
    evidence: str
    closed_forms: tuple[Matrix2, Matrix2] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if (self.kind is VerdictKind.SMOOTH) != (self.closed_forms is not None):
            raise ClassificationError("closed forms accompany smooth verdicts only")

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": self.kind.value,
            "theorem": self.theorem,
            "evidence": self.evidence,
            "details": _jsonable(self.details),
        }
        if self.closed_forms is not None:
            out["closed_forms"] = {
                f"phi{i}": {"formula": m.format_lf(), "matrix": [str(v) for v in m.entries()]}
                for i, m in enumerate(self.closed_forms)
            }
        return out


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Matrix2):
        return [str(v) for v in value.entries()]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value
