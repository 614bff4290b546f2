from fractions import Fraction

import numpy as np
import pytest

from gdconj_diagnostics import derivative_estimate
from gdconj_maps import MapDomainError

H = Fraction(1, 2**20)


def test_smooth_derivative_matches_closed_form(smooth_pair):
    x = Fraction(1, 3)
    assert derivative_estimate(smooth_pair, 0, x, H) == pytest.approx(9 / 8, abs=1e-6)
    assert derivative_estimate(smooth_pair, 1, x, H) == pytest.approx(6 / (3 - 1 / 3) ** 2, abs=1e-6)


def test_invalid_step(smooth_pair):
    with pytest.raises(ValueError):
        derivative_estimate(smooth_pair, 0, Fraction(1, 2), 0)
    with pytest.raises(MapDomainError):
        derivative_estimate(smooth_pair, 0, Fraction(1, 2**21), H)


@pytest.mark.slow
def test_affine_derivative_is_small_almost_everywhere(affine_pair, random_points):
    xs = random_points(101, seed=17, lo=H, hi=1 - H)
    estimates = [derivative_estimate(affine_pair, 0, x, H) for x in xs]
    assert np.median(estimates) < 0.5
