import math

import numpy as np
import pytest

from galcurves.curve_model import example_anti_salkowski, example_general_helix, make_circular_helix
from galcurves.curves import Curve
from galcurves.errors import KappaTooSmallError, OutOfDomainError
from galcurves.frenet import (
    Reason,
    check_admissible,
    curvature,
    derivatives,
    frame_derivative,
    frenet_frame,
    frenet_residuals,
    torsion,
)
from galcurves.gal3 import GVec3, cross, dot

import oracles


def line(slope=1.0):
    return Curve(0.0, 1.0, lambda s: (slope * s, 0.0))


def test_derivatives_examples():
    d2 = derivatives(example_anti_salkowski(), 0.0, 2)
    assert tuple(d2) == pytest.approx((0.0, 1.0, 0.0), abs=1e-15)
    assert tuple(derivatives(Curve(0.0, 1.0, lambda s: (0.0, 0.0)), 0.5, 1)) == (1.0, 0.0, 0.0)
    assert tuple(derivatives(example_general_helix(), 1.0, 1)) == pytest.approx((1, 0, -0.5))


def test_finite_difference_matches_exact_derivatives():
    exact = example_general_helix()
    fd = Curve(exact.s_min, exact.s_max, exact.position_fn)
    for s in (0.5, 0.51, 1.3, 2.99, 3.0):
        edge = s in (0.5, 3.0)
        # one-sided third-derivative stencils drop to second order
        for order, tol in ((1, 1e-10), (2, 1e-8), (3, 1e-3 if edge else 1e-5)):
            a = derivatives(exact, s, order).to_array()
            b = derivatives(fd, s, order).to_array()
            assert np.allclose(a, b, atol=tol), (s, order)


def test_out_of_domain():
    with pytest.raises(OutOfDomainError):
        derivatives(example_general_helix(), 0.4, 1)


def test_curvature_examples():
    assert curvature(example_general_helix(), 2.0) == pytest.approx(0.5, rel=1e-15)
    assert curvature(example_anti_salkowski(), 1.0) == pytest.approx(math.exp(-1), rel=1e-15)
    assert curvature(make_circular_helix(2.0, 1.0, (0.0, 1.0)), 0.7) == pytest.approx(2.0)


def test_torsion_examples():
    assert torsion(example_general_helix(), 2.0) == pytest.approx(1.0, rel=1e-14)
    for s in np.linspace(0, 2, 7):
        assert torsion(example_anti_salkowski(), s) == pytest.approx(2.0, rel=1e-14)
    assert torsion(make_circular_helix(1.0, 3.0, (0.0, 1.0)), 0.4) == pytest.approx(3.0)


def test_torsion_agrees_with_full_determinant():
    curve = make_circular_helix(1.0, 3.0, (0.0, 1.0))
    for s in np.linspace(0, 1, 11):
        d = [tuple(derivatives(curve, s, k)) for k in (1, 2, 3)]
        assert torsion(curve, s) == pytest.approx(oracles.det_torsion(*d), rel=1e-12)


def test_kappa_guard():
    with pytest.raises(KappaTooSmallError):
        curvature(line(), 0.5)
    with pytest.raises(KappaTooSmallError):
        frenet_frame(line(), 0.5)


def test_frame_examples():
    f = frenet_frame(example_general_helix(), 1.0)
    assert [*f.T, *f.N, *f.B] == pytest.approx([1, 0, -0.5, 0, 1, 0, 0, 0, 1])
    f = frenet_frame(example_anti_salkowski(), 0.0)
    assert [*f.T, *f.N, *f.B] == pytest.approx([1, -0.2, -0.4, 0, 1, 0, 0, 0, 1])


def test_frame_invariants():
    for curve in (example_general_helix(), example_anti_salkowski()):
        for s in curve.grid(17):
            f = frenet_frame(curve, s)
            assert f.T.x1 == 1.0 and f.N.x1 == 0.0 and f.B.x1 == 0.0
            assert cross(f.T, f.N) == f.B
            assert dot(f.N, f.N) == pytest.approx(1.0, abs=1e-12)
            assert dot(f.B, f.B) == pytest.approx(1.0, abs=1e-12)
            assert dot(f.N, f.B) == pytest.approx(0.0, abs=1e-12)
            assert f.B == GVec3(0.0, -f.N.x3, f.N.x2)


def test_kappa_is_galilean_norm_of_second_derivative():
    from galcurves.gal3 import norm

    curve = example_anti_salkowski()
    for s in curve.grid(9):
        assert curvature(curve, s) == norm(derivatives(curve, s, 2))


def test_torsion_equals_dN_dot_B():
    for curve in (example_general_helix(), example_anti_salkowski()):
        for s in curve.grid(13):
            f = frenet_frame(curve, s)
            _, dN, _ = frame_derivative(curve, s)
            assert dot(dN, f.B) == pytest.approx(f.tau, abs=1e-4)


@pytest.mark.parametrize(
    "curve, s, tol",
    [(example_anti_salkowski(), 1.0, 1e-4),
     (make_circular_helix(1.0, 1.0, (0.0, 2.0)), 1.0, 1e-6),
     (example_general_helix(), 2.0, 1e-4)],
)
def test_residual_examples(curve, s, tol):
    assert max(frenet_residuals(curve, s)) < tol


def test_residuals_at_domain_edges_use_shifted_stencils():
    curve = example_general_helix()
    assert max(frenet_residuals(curve, 0.5)) < 1e-4
    assert max(frenet_residuals(curve, 3.0)) < 1e-4


def test_admissibility_examples():
    rep = check_admissible(example_general_helix(), 101)
    assert rep.admissible and rep.offending_s is None
    assert rep.min_kappa == pytest.approx(1 / 3, rel=1e-14)
    assert rep.tangent_non_isotropic
    rep = check_admissible(example_anti_salkowski(), 101)
    assert rep.admissible and rep.min_kappa == pytest.approx(math.exp(-2), rel=1e-14)
    rep = check_admissible(Curve(0.0, 1.0, lambda s: (s, 0.0)), 11)
    assert not rep.admissible and rep.reason is Reason.KAPPA_TOO_SMALL
    assert rep.offending_s == 0.0


def test_admissibility_inflection_point():
    # y = s^3 has an inflection at 0
    rep = check_admissible(Curve(-1.0, 1.0, lambda s: (s**3, 0.0)), 21)
    assert not rep.admissible and rep.offending_s == pytest.approx(0.0)
    assert rep.min_kappa < 1e-6


def test_admissibility_empty_domain():
    rep = check_admissible(Curve(1.0, 1.0, lambda s: (s, 0.0)), 5)
    assert not rep.admissible and rep.reason is Reason.EMPTY_DOMAIN


def test_admissibility_non_finite():
    curve = Curve(0.0, 1.0, lambda s: (s * s, 0.0), lambda s, k: (math.inf, 0.0) if s > 0.5 else (1.0, 1.0))
    rep = check_admissible(curve, 5)
    assert not rep.admissible and rep.reason is Reason.NON_FINITE_DERIVATIVE
    assert rep.offending_s == 0.75
