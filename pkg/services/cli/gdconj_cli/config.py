import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    log_level: str = os.getenv("GDCONJ_LOG_LEVEL", "INFO")
    default_depth: int = int(os.getenv("GDCONJ_DEFAULT_DEPTH", "12"))
    default_grid: int = int(os.getenv("GDCONJ_DEFAULT_GRID", "101"))
    region_lo: str = os.getenv("GDCONJ_REGION_LO", "-1")
    region_hi: str = os.getenv("GDCONJ_REGION_HI", "2")
    region_steps: int = int(os.getenv("GDCONJ_REGION_STEPS", "150"))


settings = Settings()
