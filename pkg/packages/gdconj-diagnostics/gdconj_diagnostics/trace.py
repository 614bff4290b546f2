"""Length ratios |J_n| / |I_n| of matching g- and f-cylinders along one itinerary."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from gdconj_maps import Number
from gdconj_systems import (
    DepthLimitError,
    ItineraryError,
    SystemPair,
    chain,
    descend,
)
from gdconj_systems.coding import ProjectiveChain
from gdconj_systems.config import settings as system_settings

COLUMNS = ("depth", "digit", "f_len", "g_len", "ratio", "rs_ratio", "t_n")


@dataclass(frozen=True)
class TraceRow:
    depth: int
    digit: int
    f_len: float
    g_len: float
    ratio: float
    rs_ratio: float | None = None
    t_n: float | None = None

    def as_tuple(self) -> tuple[int, int, float, float, float, float | None, float | None]:
        return (self.depth, self.digit, self.f_len, self.g_len, self.ratio, self.rs_ratio, self.t_n)


@dataclass(frozen=True)
class RatioTrace:
    vertex: int
    x: float
    rows: tuple[TraceRow, ...]

    def column(self, name: str) -> np.ndarray:
        if name not in COLUMNS:
            raise KeyError(name)
        return np.array([getattr(row, name) for row in self.rows], dtype=float)

    def row(self, depth: int) -> TraceRow:
        return self.rows[depth - 1]


@dataclass(frozen=True, eq=False)
class RatioSummary:
    depth: int
    ratios: np.ndarray

    @property
    def median(self) -> float:
        return float(np.median(self.ratios))

    @property
    def median_log(self) -> float:
        return float(np.median(np.log(self.ratios)))

    def fraction_above(self, threshold: float) -> float:
        return float(np.mean(self.ratios > threshold))


def split_ratio(matrix: Sequence[int], rho: Fraction) -> Fraction:
    """Share of a g-cylinder with row ratio rho = r/s taken by its child under A."""
    a, b, c, d = matrix
    det = a * d - b * c
    return det * (rho + 1) / ((b * rho + d) * ((a + b) * rho + c + d))


def ratio_trace(pair: SystemPair, i: int, x: Number | int, depth: int) -> RatioTrace:
    """Trace cylinder lengths down to `depth`.

    rs_ratio and t_n are filled for projective g only; t_n of the last row
    stays empty because it needs the next digit.
    """
    pair.require_valid()
    if depth < 1:
        raise ItineraryError(f"depth must be at least 1, got {depth}")
    if depth > system_settings.max_descent_depth:
        raise DepthLimitError(f"depth {depth} exceeds the limit {system_settings.max_descent_depth}")

    g_chain = chain(pair.g, i)
    rows: list[TraceRow] = []
    rho: Fraction | None = None
    vertex = i
    for digit, f_chain in descend(pair.f, i, x):
        g_chain = g_chain.extend(digit)
        f_len, g_len = f_chain.width(), g_chain.width()
        rs_ratio = None
        if isinstance(g_chain, ProjectiveChain):
            if rho is not None and rows:
                t_n = split_ratio(pair.g.int_matrix(vertex, digit), rho)
                last = rows[-1]
                rows[-1] = TraceRow(*last.as_tuple()[:-1], t_n=float(t_n))
            _, _, c, d = g_chain.matrix
            rho = Fraction(c, d)
            rs_ratio = float(rho)
        rows.append(
            TraceRow(
                depth=len(rows) + 1,
                digit=digit,
                f_len=float(f_len),
                g_len=float(g_len),
                ratio=float(g_len / f_len) if f_len else float("nan"),
                rs_ratio=rs_ratio,
            )
        )
        vertex = digit
        if len(rows) == depth:
            break
    return RatioTrace(vertex=i, x=float(x), rows=tuple(rows))


def log_ratio_summary(pair: SystemPair, i: int, xs: Iterable[Number], depth: int) -> RatioSummary:
    ratios = [ratio_trace(pair, i, x, depth).row(depth).ratio for x in xs]
    return RatioSummary(depth=depth, ratios=np.array(ratios, dtype=float))
