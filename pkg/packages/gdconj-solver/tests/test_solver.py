import random
from fractions import Fraction

import numpy as np
import pytest

from gdconj_maps import MapDomainError
from gdconj_solver import graph_operator_check, residual_max, sample_curve, solve_phi
from gdconj_systems import DepthLimitError, SystemPair, affine_system, delta, dyadic_system, exact_breakpoints


def _random_points(count, seed=7):
    rng = random.Random(seed)
    return sorted(Fraction(rng.getrandbits(96), 2**96) for _ in range(count))


def test_identity_pair_is_exact():
    pair = SystemPair(dyadic_system(), affine_system("1/2", "1/2"))
    value = solve_phi(pair, 0, Fraction(1, 3))
    assert value.exact == Fraction(1, 3)
    assert value.depth_used == 0
    assert residual_max(pair, 11) == 0


def test_fixed_ends(affine_pair):
    for vertex in (0, 1):
        assert solve_phi(affine_pair, vertex, 0).exact == 0
        assert solve_phi(affine_pair, vertex, 1).exact == 1
        assert solve_phi(affine_pair, vertex, 0).enclosure.width == 0


def test_cylinder_end_is_returned_exactly(affine_pair):
    value = solve_phi(affine_pair, 0, Fraction(1, 2))
    assert value.exact == Fraction(1, 4)
    assert value.depth_used == 1
    assert solve_phi(affine_pair, 0, Fraction(1, 2), prefer=1).exact == Fraction(1, 4)
    slow = solve_phi(affine_pair, 0, Fraction(1, 2), tol=1e-6, exact_endpoints=False)
    assert slow.exact is None
    assert slow.converged
    assert slow.enclosure.contains(Fraction(1, 4))


def test_enclosures_are_nested(affine_pair):
    x = Fraction(2, 7)
    coarse = solve_phi(affine_pair, 1, x, tol=1e-4)
    fine = solve_phi(affine_pair, 1, x, tol=1e-12)
    assert coarse.enclosure.width <= 1e-4
    assert fine.enclosure.width <= 1e-12 + 1e-16
    assert coarse.enclosure.contains(fine.value)
    assert fine.itinerary.digits[: len(coarse.itinerary)] == coarse.itinerary.digits


def test_phi_is_monotone(affine_pair):
    values = [solve_phi(affine_pair, 0, x).value for x in _random_points(200)]
    assert all(a <= b + 2e-10 for a, b in zip(values, values[1:]))


def test_conjugacy_holds_pointwise(affine_pair):
    x = Fraction(2, 7)
    for i in (0, 1):
        for j in (0, 1):
            lhs = affine_pair.g.map(i, j).evaluate(solve_phi(affine_pair, j, x, tol=1e-12).value)
            rhs = solve_phi(affine_pair, i, affine_pair.f.map(i, j).evaluate(x), tol=1e-12).value
            assert abs(float(lhs - rhs)) < 1e-10


def test_smooth_pair_matches_closed_forms(smooth_pair):
    for k in range(11):
        x = Fraction(k, 10)
        assert float(solve_phi(smooth_pair, 0, x, tol=1e-12).value) == pytest.approx(float(2 * x / (x + 1)), abs=1e-10)
        assert float(solve_phi(smooth_pair, 1, x, tol=1e-12).value) == pytest.approx(float(2 * x / (3 - x)), abs=1e-10)


def test_residual_on_affine_pair(affine_pair):
    assert residual_max(affine_pair, 21) <= 1e-8


def test_nonlinear_cylinder_ends(nonlinear_pair):
    assert solve_phi(nonlinear_pair, 0, Fraction(1, 2)).value == pytest.approx(0.5)
    assert solve_phi(nonlinear_pair, 0, Fraction(1, 4)).value == pytest.approx(1 / 6)


def test_depth_cap_reports_non_convergence(affine_pair):
    value = solve_phi(affine_pair, 0, Fraction(1, 3), tol=1e-30, max_depth=10)
    assert not value.converged
    assert value.depth_used == 10
    assert value.enclosure.width > 0


def test_invalid_arguments(affine_pair):
    with pytest.raises(ValueError):
        solve_phi(affine_pair, 0, Fraction(1, 3), tol=0)
    with pytest.raises(MapDomainError):
        solve_phi(affine_pair, 0, 1.5)


def test_sample_curve_shape(affine_pair):
    curve = sample_curve(affine_pair, 0, 10)
    assert len(curve) == 2**10 + 1
    assert np.all(np.diff(curve.xs) > 0)
    assert np.all(np.diff(curve.ys) >= 0)
    assert curve.points[0] == (0.0, 0.0)
    assert curve.points[-1] == (1.0, 1.0)
    with pytest.raises(DepthLimitError):
        sample_curve(affine_pair, 0, 21)


@pytest.mark.parametrize("fixture", ["affine_pair", "smooth_pair"])
def test_graph_operator_moves_points_less_than_delta(fixture, request):
    pair = request.getfixturevalue(fixture)
    bound = max(float(delta(pair.f, v, 8)) for v in (0, 1))
    assert graph_operator_check(pair, 8) <= bound + 1e-12


def _smooth_phi(i, x):
    return 2 * x / (x + 1) if i == 0 else 2 * x / (3 - x)


def test_smooth_pair_on_the_dyadic_grid(smooth_pair):
    for k in range(1025):
        x = Fraction(k, 1024)
        for i in (0, 1):
            value = solve_phi(smooth_pair, i, x, tol=1e-10)
            assert value.converged
            assert abs(float(value.value) - float(_smooth_phi(i, x))) <= 1e-9, (i, x)


def test_smooth_pair_at_random_points(smooth_pair):
    for x in _random_points(300, seed=41):
        for i in (0, 1):
            value = solve_phi(smooth_pair, i, x, tol=1e-10)
            assert value.converged
            assert value.enclosure.width <= 1e-10 + 1e-16
            assert abs(float(value.value) - float(_smooth_phi(i, x))) <= 1e-9, (i, x)


@pytest.mark.parametrize("fixture", ["affine_pair", "singular_pair", "smooth_pair", "nonlinear_pair"])
def test_residual_stays_within_a_few_tolerances(fixture, request):
    pair = request.getfixturevalue(fixture)
    assert residual_max(pair, 101, tol=1e-8) <= 4e-8


@pytest.mark.parametrize("fixture", ["affine_pair", "singular_pair", "smooth_pair", "nonlinear_pair"])
def test_graph_operator_at_depth_ten(fixture, request):
    pair = request.getfixturevalue(fixture)
    bound = max(float(delta(pair.f, v, 10)) for v in (0, 1))
    assert graph_operator_check(pair, 10) <= 2 * bound


def test_graph_operator_vanishes_for_identical_systems():
    pair = SystemPair(dyadic_system(), affine_system("1/2", "1/2"))
    assert graph_operator_check(pair, 10) <= 1e-15


def test_tie_break_does_not_change_the_value(smooth_pair, affine_pair):
    cases = [(smooth_pair, Fraction(k, 64)) for k in range(1, 64, 3)]
    cases += [(affine_pair, x) for x in exact_breakpoints(affine_pair.f, 0, 5)[1:-1]]
    for pair, x in cases:
        for i in (0, 1):
            left = solve_phi(pair, i, x, tol=1e-10, prefer=0, exact_endpoints=False)
            right = solve_phi(pair, i, x, tol=1e-10, prefer=1, exact_endpoints=False)
            assert left.converged and right.converged
            assert abs(left.value - right.value) <= 2e-10, (pair.label, i, x)


@pytest.mark.parametrize("fixture", ["affine_pair", "smooth_pair"])
def test_enclosures_nest_as_tolerance_tightens(fixture, request):
    pair = request.getfixturevalue(fixture)
    for x in _random_points(50, seed=43):
        for i in (0, 1):
            outer = None
            for tol in (1e-3, 1e-6, 1e-9):
                inner = solve_phi(pair, i, x, tol=tol).enclosure
                if outer is not None:
                    assert outer.lo <= inner.lo and inner.hi <= outer.hi, (i, x, tol)
                outer = inner


def test_identical_affine_systems_sample_the_diagonal():
    pair = SystemPair(affine_system("2/5", "3/7"), affine_system("2/5", "3/7"))
    for vertex in (0, 1):
        curve = sample_curve(pair, vertex, 12)
        assert np.array_equal(curve.xs, curve.ys)
        assert solve_phi(pair, vertex, Fraction(3, 11)).exact == Fraction(3, 11)
