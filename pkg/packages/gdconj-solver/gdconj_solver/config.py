import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    default_tol: float = float(os.getenv("GDCONJ_DEFAULT_TOL", "1e-10"))
    max_curve_depth: int = int(os.getenv("GDCONJ_MAX_CURVE_DEPTH", "20"))
    max_operator_depth: int = int(os.getenv("GDCONJ_MAX_OPERATOR_DEPTH", "16"))


settings = Settings()
