from fractions import Fraction

import pytest

from gdconj_maps import AffineMap, Matrix2, parse_expr
from gdconj_systems import System, affine_system, lf_system


@pytest.fixture
def lf_singular():
    return lf_system(
        [
            [Matrix2.of(1, 0, 1, 1), Matrix2.of(0, 1, -1, 2)],
            [Matrix2.of(1, 0, -1, 3), Matrix2.of(3, 1, 2, 2)],
        ],
        label="lf-singular",
    )


@pytest.fixture
def affine_f():
    return affine_system(Fraction(1, 2), Fraction(1, 3), label="affine-f")


@pytest.fixture
def lf_smooth():
    return lf_system(
        [
            [Matrix2.of(2, 0, -1, 4), Matrix2.of(4, 2, 3, 3)],
            [Matrix2.of(2, 0, -7, 12), Matrix2.of(4, 2, 1, 5)],
        ],
        label="lf-smooth",
    )


@pytest.fixture
def nonlinear_g():
    half = Fraction(1, 2)
    return System.from_rows(
        [
            [parse_expr("x^2/(x+1)", declared_lip="3/4"), AffineMap(half, half)],
            [parse_expr("x^(3/2)/8", declared_lip="3/16"), parse_expr("(7*x+1)/8", declared_lip="7/8")],
        ],
        label="nonlinear",
    )
