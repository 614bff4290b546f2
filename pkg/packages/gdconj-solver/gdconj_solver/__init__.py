from gdconj_solver.solver import (
    CurveSample,
    PhiValue,
    graph_operator_check,
    residual_max,
    sample_curve,
    solve_phi,
)

__all__ = [
    "CurveSample",
    "PhiValue",
    "graph_operator_check",
    "residual_max",
    "sample_curve",
    "solve_phi",
]
