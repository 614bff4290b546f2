import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    max_delta_depth: int = int(os.getenv("GDCONJ_MAX_DELTA_DEPTH", "24"))
    exact_delta_depth: int = int(os.getenv("GDCONJ_EXACT_DELTA_DEPTH", "16"))
    max_descent_depth: int = int(os.getenv("GDCONJ_MAX_DESCENT_DEPTH", "64"))
    exact_curve_depth: int = int(os.getenv("GDCONJ_EXACT_CURVE_DEPTH", "20"))


settings = Settings()
