import math

import numpy as np
import pytest

from galcurves.finite_diff import StencilError, derivative, offsets_for, weights


def test_central_weights():
    assert weights((-2, -1, 0, 1, 2), 1) == pytest.approx((1 / 12, -2 / 3, 0, 2 / 3, -1 / 12))
    assert weights((-2, -1, 0, 1, 2), 2) == pytest.approx((-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12))
    assert weights((-2, -1, 0, 1, 2), 3) == pytest.approx((-1 / 2, 1, 0, -1, 1 / 2))


@pytest.mark.parametrize("order", [1, 2, 3])
@pytest.mark.parametrize("s", [0.0, 0.3, 0.999, 1.0])
def test_polynomials_of_accuracy_degree_are_exact(order, s):
    # accuracy p means exactness on polynomials of degree order + p - 1
    degree = {1: 4, 2: 5, 3: 4}[order]
    coeffs = np.arange(1, degree + 2, dtype=float)
    poly = np.polynomial.Polynomial(coeffs)
    got = derivative(poly, s, order, 0.0, 1.0, h=0.05)
    assert got == pytest.approx(poly.deriv(order)(s), rel=1e-8)


def test_shifted_stencils_stay_inside():
    h = 0.01
    for order in (1, 2, 3):
        for s in (0.0, 0.005, 0.5, 0.995, 1.0):
            offs = offsets_for(order, s, h, 0.0, 1.0)
            assert s + offs[0] * h >= 0.0 - 1e-15
            assert s + offs[-1] * h <= 1.0 + 1e-15
    assert len(offsets_for(2, 0.0, h, 0.0, 1.0)) == 6


@pytest.mark.parametrize("order, tol", [(1, 1e-10), (2, 1e-8), (3, 1e-5)])
def test_sin_derivatives_near_edge(order, tol):
    exact = [math.cos, lambda x: -math.sin(x), lambda x: -math.cos(x)][order - 1]
    for s in (0.0, 0.001, 1.0):
        assert derivative(math.sin, s, order, 0.0, 1.0) == pytest.approx(exact(s), abs=tol)


def test_domain_too_short():
    with pytest.raises(StencilError):
        derivative(math.sin, 0.0, 1, 0.0, 1e-4)
