from gdconj_diagnostics.derivative import derivative_estimate
from gdconj_diagnostics.patterns import PatternCounts, pattern_counts, pattern_frequencies
from gdconj_diagnostics.trace import (
    COLUMNS,
    RatioSummary,
    RatioTrace,
    TraceRow,
    log_ratio_summary,
    ratio_trace,
    split_ratio,
)

__all__ = [
    "COLUMNS",
    "PatternCounts",
    "RatioSummary",
    "RatioTrace",
    "TraceRow",
    "derivative_estimate",
    "log_ratio_summary",
    "pattern_counts",
    "pattern_frequencies",
    "ratio_trace",
    "split_ratio",
]
