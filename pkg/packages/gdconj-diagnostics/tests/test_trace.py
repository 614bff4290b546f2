import random
from fractions import Fraction

import numpy as np
import pytest

from gdconj_diagnostics import log_ratio_summary, ratio_trace
from gdconj_systems import DepthLimitError, SystemPair, affine_system, chain, dyadic_system


def test_identity_pair_has_unit_ratios():
    trace = ratio_trace(SystemPair(dyadic_system(), affine_system("1/2", "1/2")), 0, Fraction(1, 3), 12)
    assert len(trace.rows) == 12
    assert np.all(trace.column("ratio") == 1.0)
    assert trace.row(5).f_len == 2.0**-5
    assert all(row.t_n == 0.5 for row in trace.rows[:-1])
    assert trace.rows[-1].t_n is None


def test_split_ratio_predicts_the_next_length(singular_pair):
    trace = ratio_trace(singular_pair, 0, Fraction(1, 3), 20)
    for row, following in zip(trace.rows, trace.rows[1:]):
        assert row.t_n == pytest.approx(following.g_len / row.g_len, rel=1e-9)
        assert row.rs_ratio is not None


def test_smooth_split_ratios_approach_one_half(smooth_pair, random_points):
    for x in random_points(100, seed=3):
        t_n = ratio_trace(smooth_pair, 0, x, 51).row(50).t_n
        assert abs(t_n - 0.5) < 1e-3


def test_affine_left_branch_ratio_halves_each_step(affine_pair):
    trace = ratio_trace(affine_pair, 0, 0, 10)
    assert all(row.digit == 0 for row in trace.rows)
    assert trace.row(10).ratio == pytest.approx(2.0**-10)


def test_nonlinear_trace_has_no_row_ratios(nonlinear_pair):
    trace = ratio_trace(nonlinear_pair, 1, Fraction(1, 3), 10)
    assert all(row.rs_ratio is None and row.t_n is None for row in trace.rows)
    assert np.all(np.diff(trace.column("g_len")) <= 0)


def test_trace_depth_limit(affine_pair):
    with pytest.raises(DepthLimitError):
        ratio_trace(affine_pair, 0, Fraction(1, 3), 65)


@pytest.mark.slow
def test_affine_ratios_collapse(affine_pair, random_points):
    summary = log_ratio_summary(affine_pair, 0, random_points(300), 64)
    assert summary.median < 0.05


@pytest.mark.slow
def test_lf_singular_log_ratios_drift_down(singular_pair, random_points):
    traces = [ratio_trace(singular_pair, 0, x, 64) for x in random_points(200, seed=5)]
    shallow = np.median([np.log(t.row(8).ratio) for t in traces])
    deep = np.median([np.log(t.row(64).ratio) for t in traces])
    assert deep <= shallow - 1


def test_row_ratio_settles_on_the_current_vertex_parameter(smooth_pair, random_points):
    limits = {0: -0.5, 1: 0.5}
    for x in random_points(50, seed=13):
        for vertex in (0, 1):
            trace = ratio_trace(smooth_pair, vertex, x, 40)
            for row in trace.rows[29:]:
                assert abs(row.rs_ratio - limits[row.digit]) < 1e-3, (x, vertex, row.depth)


@pytest.mark.parametrize("fixture", ["singular_pair", "smooth_pair"])
def test_chain_rows_stay_positive(fixture, request):
    pair = request.getfixturevalue(fixture)
    rng = random.Random(19)
    for _ in range(50):
        c = chain(pair.g, rng.randrange(2))
        for _ in range(40):
            c = c.extend(rng.randrange(2))
            _, _, r, s = c.matrix
            assert s > 0
            assert r + s > 0


def test_affine_ratio_is_the_product_of_slope_ratios(affine_pair, random_points):
    for x in random_points(30, seed=17):
        trace = ratio_trace(affine_pair, 1, x, 30)
        vertex, product = 1, 1.0
        for row in trace.rows:
            g_slope = affine_pair.g.map(vertex, row.digit).slope
            f_slope = affine_pair.f.map(vertex, row.digit).slope
            product *= float(g_slope / f_slope)
            assert row.ratio == pytest.approx(product, rel=1e-12)
            vertex = row.digit


@pytest.mark.slow
def test_nonlinear_ratios_collapse(nonlinear_pair, random_points):
    points = random_points(300, seed=23)
    assert log_ratio_summary(nonlinear_pair, 0, points, 30).fraction_above(0.01) < 0.2
    assert log_ratio_summary(nonlinear_pair, 0, points, 64).median < 1e-3
