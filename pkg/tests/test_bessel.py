import math

import numpy as np
import pytest
from scipy import special

from indicatorft.bessel import SERIES_CUTOFF, jv, jv_series


@pytest.mark.parametrize("nu", [0, 0.5, 1, 1.5, 2, 2.5, 3.5, 5])
def test_matches_scipy(nu):
    x = np.linspace(0, 200, 4001)
    np.testing.assert_allclose(jv(nu, x), special.jv(nu, x), rtol=0, atol=1e-10)


def test_branches_agree_at_cutoff():
    x = np.array([SERIES_CUTOFF])
    assert abs(jv_series(1, x)[0] - jv(1, SERIES_CUTOFF + 1e-12)) < 1e-10


def test_half_integer_closed_forms():
    x = 7.3
    assert jv(0.5, x) == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sin(x), abs=1e-13)
    assert jv(1.5, 20.0) == pytest.approx(
        math.sqrt(2 / (math.pi * 20)) * (math.sin(20) / 20 - math.cos(20)), abs=1e-13)


def test_rejects_unsupported_orders():
    with pytest.raises(ValueError):
        jv(0.3, 1.0)
    with pytest.raises(ValueError):
        jv(1, -1.0)
