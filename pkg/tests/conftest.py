import math
from fractions import Fraction

import numpy as np
import pytest

from indicatorft import Ball, ProductBody, make_hexagon_H, make_rhombus_R, make_square
from indicatorft.bodies import convex_hull

# Reference values computed with the oracles in indicatorft.oracle (order 24
# fan quadrature, slab quadrature, 1D Gauss-Legendre) and frozen here.
R_HALF = 2.4317084074161084  # FT_R(1/2, 0); equals 24 / pi^2
H_HALF = 0.8105694691387033  # FT_H(1/2, 0); equals 8 / pi^2
BALL3_HALF = 1.2732395447351628  # unit 3-ball at |xi| = 1/2; equals 4 / pi
BALL2_ONE = -0.2123825300763691  # unit disk at |xi| = 1; J_1(2 pi)
INTERVAL_QUARTER = 1.2732395447351625  # h = 1, xi = 1/4
SQRT6_SQUARE_X1 = 0.7699009276955616  # centered square of side ~sqrt(6) at (1, 0)

CANDIDATE = ((1, 3), (1, -3))


@pytest.fixture
def R():
    return make_rhombus_R()


@pytest.fixture
def H():
    return make_hexagon_H()


@pytest.fixture
def P():
    return ProductBody([make_rhombus_R(), Ball(2, 1)])


@pytest.fixture
def Q():
    return ProductBody([make_hexagon_H(), Ball(2, 1)])


@pytest.fixture
def unit_square():
    return make_square(1, center=(Fraction(1, 2), Fraction(1, 2)))


def random_rational(rng, lo, hi, den=64):
    return Fraction(int(rng.integers(lo * den, hi * den + 1)), den)


def random_convex_polygon(rng, n_points=8, span=3, den=8):
    while True:
        pts = [(random_rational(rng, -span, span, den), random_rational(rng, -span, span, den))
               for _ in range(n_points)]
        try:
            return convex_hull(pts)
        except ValueError:
            continue


def pythagorean_rotation(rng):
    """Rational orthogonal matrix from a random Pythagorean triple."""
    while True:
        m, n = (int(v) for v in rng.integers(1, 12, size=2))
        if m != n:
            break
    a, b, c = m * m - n * n, 2 * m * n, m * m + n * n
    cos, sin = Fraction(a, c), Fraction(b, c)
    if rng.random() < 0.5:
        cos, sin = -cos, sin
    return [[cos, -sin], [sin, cos]]


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
