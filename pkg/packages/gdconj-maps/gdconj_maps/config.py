import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    validation_grid: int = int(os.getenv("GDCONJ_VALIDATION_GRID", "1025"))
    lipschitz_grid: int = int(os.getenv("GDCONJ_LIPSCHITZ_GRID", "4097"))
    lipschitz_step: float = float(os.getenv("GDCONJ_LIPSCHITZ_STEP", str(2.0**-20)))
    expr_tolerance: float = float(os.getenv("GDCONJ_EXPR_TOLERANCE", "1e-12"))


settings = Settings()
