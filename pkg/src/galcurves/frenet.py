"""Derivatives, curvature, torsion and the Frenet trihedron of admissible curves."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import finite_diff
from .curves import Curve
from .errors import (
    EmptyDomainError,
    KappaTooSmallError,
    NonFiniteDerivativeError,
    OutOfDomainError,
)
from .gal3 import GVec3, norm

# frame singularity guard
EPS_KAPPA = 1e-9
# admissibility verdict threshold
EPS_ADM = 1e-6


@dataclass(frozen=True)
class FrenetFrame:
    s: float
    T: GVec3
    N: GVec3
    B: GVec3
    kappa: float
    tau: float


class Reason(enum.Enum):
    KAPPA_TOO_SMALL = "KappaTooSmall"
    NON_FINITE_DERIVATIVE = "NonFiniteDerivative"
    EMPTY_DOMAIN = "EmptyDomain"


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    min_kappa: float
    offending_s: float | None = None
    reason: Reason | None = None
    # graph form (s, y, z) has tangent (1, y', z'), never isotropic
    tangent_non_isotropic: bool = True


def _yz_derivative(curve: Curve, s: float, order: int) -> tuple[float, float]:
    if curve.derivative_fn is not None:
        return curve.derivative_fn(s, order)
    d = finite_diff.derivative(
        lambda u: np.array(curve.position_fn(u)), s, order, curve.s_min, curve.s_max
    )
    return float(d[0]), float(d[1])


def derivatives(curve: Curve, s: float, order: int) -> GVec3:
    """The ``order``-th derivative of the position vector at ``s``.

    Exact (or ODE-state) evaluators are used when the curve carries them;
    otherwise 5-point finite differences with ``h = 1e-3 * max(1, |s|)``,
    fourth order for orders 1-2 and second order for order 3.  The first
    component is exact since ``x == s``.
    """
    if order not in (1, 2, 3):
        raise ValueError(f"derivative order must be 1..3, got {order}")
    s = curve.require(s)
    try:
        dy, dz = _yz_derivative(curve, s, order)
    except finite_diff.StencilError as exc:
        raise OutOfDomainError(str(exc), s) from exc
    if not (math.isfinite(dy) and math.isfinite(dz)):
        raise NonFiniteDerivativeError(f"non-finite derivative of order {order} at s={s!r}", s)
    return GVec3(1.0 if order == 1 else 0.0, dy, dz)


def _kappa_raw(curve: Curve, s: float) -> tuple[float, GVec3]:
    d2 = derivatives(curve, s, 2)
    return math.hypot(d2.x2, d2.x3), d2


def curvature(curve: Curve, s: float) -> float:
    """``sqrt(y''^2 + z''^2)``; raises :class:`KappaTooSmallError` below ``EPS_KAPPA``."""
    kappa, _ = _kappa_raw(curve, s)
    if kappa < EPS_KAPPA:
        raise KappaTooSmallError(f"curvature {kappa!r} below {EPS_KAPPA} at s={s!r}", s)
    return kappa


def _torsion(kappa: float, d2: GVec3, d3: GVec3) -> float:
    # det(r', r'', r''') with r' = (1, .), r'' = (0, .), r''' = (0, .):
    # cofactor expansion down the first column leaves a 2x2 determinant
    return (d2.x2 * d3.x3 - d2.x3 * d3.x2) / (kappa * kappa)


def torsion(curve: Curve, s: float) -> float:
    """``det(r', r'', r''') / kappa**2``."""
    kappa = curvature(curve, s)
    d2 = derivatives(curve, s, 2)
    d3 = derivatives(curve, s, 3)
    return _torsion(kappa, d2, d3)


def frenet_frame(curve: Curve, s: float) -> FrenetFrame:
    """Tangent ``r'``, normal ``r''/kappa``, binormal ``(0, -z'', y'')/kappa``."""
    s = curve.require(s)
    kappa, d2 = _kappa_raw(curve, s)
    if kappa < EPS_KAPPA:
        raise KappaTooSmallError(f"curvature {kappa!r} below {EPS_KAPPA} at s={s!r}", s)
    d1 = derivatives(curve, s, 1)
    d3 = derivatives(curve, s, 3)
    n2, n3 = d2.x2 / kappa, d2.x3 / kappa
    return FrenetFrame(
        s=s,
        T=d1,
        N=GVec3(0.0, n2, n3),
        B=GVec3(0.0, -n3, n2),
        kappa=kappa,
        tau=_torsion(kappa, d2, d3),
    )


def _frame_array(curve: Curve, s: float) -> np.ndarray:
    f = frenet_frame(curve, s)
    return np.array([*f.T, *f.N, *f.B])


def frame_derivative(curve: Curve, s: float) -> tuple[GVec3, GVec3, GVec3]:
    """``(T', N', B')`` by 4th-order finite differences of the frame over ``s``."""
    s = curve.require(s)
    h = finite_diff.step_size(s)
    try:
        d = finite_diff.derivative(
            lambda u: _frame_array(curve, u), s, 1, curve.s_min, curve.s_max, h
        )
    except finite_diff.StencilError as exc:
        raise OutOfDomainError(str(exc), s) from exc
    return GVec3(*d[0:3]), GVec3(*d[3:6]), GVec3(*d[6:9])


def frenet_residuals(curve: Curve, s: float) -> tuple[float, float, float]:
    """Galilean norms of ``T' - kN``, ``N' - tB`` and ``B' + tN``."""
    f = frenet_frame(curve, s)
    dT, dN, dB = frame_derivative(curve, s)
    r_t = norm(dT - f.kappa * f.N)
    r_n = norm(dN - f.tau * f.B)
    r_b = norm(dB + f.tau * f.N)
    return r_t, r_n, r_b


def check_admissible(curve: Curve, n: int) -> AdmissibilityReport:
    """Sample ``n`` uniform points; admissible iff ``kappa >= EPS_ADM`` and all derivatives finite.

    The whole grid is always scanned so ``min_kappa`` covers every sample;
    the report names the first offending point.
    """
    if n < 2:
        raise ValueError(f"grid size must be at least 2, got {n}")
    try:
        grid = curve.grid(n)
    except EmptyDomainError:
        return AdmissibilityReport(False, math.nan, curve.s_min, Reason.EMPTY_DOMAIN)
    min_kappa = math.inf
    offending: tuple[float, Reason] | None = None
    for s in grid:
        s = float(s)
        try:
            kappa, _ = _kappa_raw(curve, s)
            derivatives(curve, s, 1)
            derivatives(curve, s, 3)
        except NonFiniteDerivativeError:
            offending = offending or (s, Reason.NON_FINITE_DERIVATIVE)
            continue
        min_kappa = min(min_kappa, kappa)
        if kappa < EPS_ADM:
            offending = offending or (s, Reason.KAPPA_TOO_SMALL)
    if offending is None:
        return AdmissibilityReport(True, min_kappa)
    return AdmissibilityReport(False, min_kappa, offending[0], offending[1])
