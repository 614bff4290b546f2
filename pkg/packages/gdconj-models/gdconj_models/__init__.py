from gdconj_models.pair import (
    AffineSpec,
    ExprSpec,
    LFSpec,
    MapSpec,
    PairConfig,
    Rational,
    RowSpec,
    RunParams,
    SystemSpec,
)
from gdconj_models.report import Report

__all__ = [
    "AffineSpec",
    "ExprSpec",
    "LFSpec",
    "MapSpec",
    "PairConfig",
    "Rational",
    "Report",
    "RowSpec",
    "RunParams",
    "SystemSpec",
]
