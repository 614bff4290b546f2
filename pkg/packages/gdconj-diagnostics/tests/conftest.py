import random
from fractions import Fraction

import pytest

from gdconj_maps import AffineMap, Matrix2, parse_expr
from gdconj_systems import System, SystemPair, affine_system, dyadic_system, lf_system


def _random_points(count, seed=11, lo=Fraction(0), hi=Fraction(1)):
    rng = random.Random(seed)
    return [lo + (hi - lo) * Fraction(rng.getrandbits(96), 2**96) for _ in range(count)]


@pytest.fixture
def random_points():
    """Exact 96-bit points, so that the descent never lands on a cylinder end by rounding."""
    return _random_points


@pytest.fixture
def affine_pair():
    return SystemPair(affine_system("1/2", "1/3"), affine_system("1/4", "1/5"), label="ex-affine")


@pytest.fixture
def singular_pair():
    g = lf_system(
        [
            [Matrix2.of(1, 0, 1, 1), Matrix2.of(0, 1, -1, 2)],
            [Matrix2.of(1, 0, -1, 3), Matrix2.of(3, 1, 2, 2)],
        ]
    )
    return SystemPair(dyadic_system(), g, label="ex-lf-singular")


@pytest.fixture
def smooth_pair():
    g = lf_system(
        [
            [Matrix2.of(2, 0, -1, 4), Matrix2.of(4, 2, 3, 3)],
            [Matrix2.of(2, 0, -7, 12), Matrix2.of(4, 2, 1, 5)],
        ]
    )
    return SystemPair(dyadic_system(), g, label="ex-lf-smooth")


@pytest.fixture
def nonlinear_pair():
    half = Fraction(1, 2)
    g = System.from_rows(
        [
            [parse_expr("x^2/(x+1)", declared_lip="3/4"), AffineMap(half, half)],
            [parse_expr("x^(3/2)/8", declared_lip="3/16"), parse_expr("(7*x+1)/8", declared_lip="7/8")],
        ]
    )
    return SystemPair(dyadic_system(), g, label="ex-nonlinear")
