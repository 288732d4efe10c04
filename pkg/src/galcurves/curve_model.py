"""Special curve families and the two closed-form golden curves.

The general helix, Salkowski and anti-Salkowski families are thin wrappers
over :func:`natural_eq.reconstruct`; the circular helix and the golden
examples are closed forms with hand-differentiated derivatives.

Integration constants follow one convention throughout: every
antiderivative vanishes at ``s_min`` unless an explicit
:class:`IntrinsicState` says otherwise.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable, Union

from .curves import Curve, DerivativeSource
from .errors import OutOfDomainError, ParameterError
from .expr import describe, scalar_function
from .natural_eq import IntrinsicState, NaturalEquations, reconstruct

ScalarSpec = Union[str, float, Callable[[float], float]]

MIN_STEPS = 4096
STEPS_PER_UNIT = 1024

EXAMPLE1_DOMAIN = (0.5, 3.0)
EXAMPLE2_DOMAIN = (0.0, 2.0)


def default_steps(domain: tuple[float, float]) -> int:
    return max(MIN_STEPS, math.ceil(STEPS_PER_UNIT * (domain[1] - domain[0])))


@dataclass(frozen=True)
class GeneralHelix:
    """Constant ratio ``tau / kappa = m``."""

    m: float
    kappa: ScalarSpec

    def validate(self) -> None:
        if not math.isfinite(self.m) or self.m == 0.0:
            raise ParameterError(f"general helix needs finite m != 0, got {self.m!r}")


@dataclass(frozen=True)
class CircularHelix:
    kappa0: float
    tau0: float

    def validate(self) -> None:
        if not (math.isfinite(self.kappa0) and self.kappa0 > 0.0):
            raise ParameterError(f"circular helix needs kappa0 > 0, got {self.kappa0!r}")
        if not math.isfinite(self.tau0) or self.tau0 == 0.0:
            raise ParameterError(f"circular helix needs finite tau0 != 0, got {self.tau0!r}")


@dataclass(frozen=True)
class Salkowski:
    """Constant curvature, varying torsion."""

    kappa0: float
    tau: ScalarSpec

    def validate(self) -> None:
        if not (math.isfinite(self.kappa0) and self.kappa0 > 0.0):
            raise ParameterError(f"Salkowski curve needs kappa0 > 0, got {self.kappa0!r}")


@dataclass(frozen=True)
class AntiSalkowski:
    """Constant torsion, varying curvature."""

    kappa: ScalarSpec
    tau0: float

    def validate(self) -> None:
        if not math.isfinite(self.tau0):
            raise ParameterError(f"anti-Salkowski curve needs finite tau0, got {self.tau0!r}")


FamilyParams = Union[GeneralHelix, CircularHelix, Salkowski, AntiSalkowski]


def _integrated(
    kappa: ScalarSpec,
    tau: ScalarSpec,
    domain: tuple[float, float],
    steps: int | None,
    initial: IntrinsicState | None,
    family: str,
    params: dict,
) -> Curve:
    eqs = NaturalEquations.of(kappa, tau, domain)
    return reconstruct(eqs, steps or default_steps(domain), initial, family, params)


def make_general_helix(
    m: float,
    kappa: ScalarSpec,
    domain: tuple[float, float],
    steps: int | None = None,
    initial: IntrinsicState | None = None,
) -> Curve:
    GeneralHelix(m, kappa).validate()
    kf = scalar_function(kappa)
    m = float(m)

    def tau(s: float) -> float:
        return m * kf(s)

    tau.source = f"{m!r}*({describe(kf)})"
    return _integrated(kf, tau, domain, steps, initial, "general-helix", {"m": m})


def make_circular_helix(
    kappa0: float,
    tau0: float,
    domain: tuple[float, float],
    initial: IntrinsicState | None = None,
) -> Curve:
    """Closed-form helix with curvature ``kappa0`` (amplitude) and torsion ``tau0`` (frequency).

    With turning angle ``theta = theta0 + tau0 * (s - s0)`` and ``r = kappa0 / tau0``::

        y' = yp0 + r (sin theta - sin theta0)
        z' = zp0 - r (cos theta - cos theta0)

    and ``y``, ``z`` their antiderivatives through ``(y0, z0)``.
    """
    CircularHelix(kappa0, tau0).validate()
    k, t = float(kappa0), float(tau0)
    s0 = float(domain[0])
    ini = initial or IntrinsicState()
    th0, y0, z0, yp0, zp0 = ini.as_tuple()
    r = k / t
    sin0, cos0 = math.sin(th0), math.cos(th0)

    def position(s: float) -> tuple[float, float]:
        u = s - s0
        th = th0 + t * u
        y = y0 + (yp0 - r * sin0) * u - r / t * (math.cos(th) - cos0)
        z = z0 + (zp0 + r * cos0) * u - r / t * (math.sin(th) - sin0)
        return y, z

    def derivative(s: float, order: int) -> tuple[float, float]:
        th = th0 + t * (s - s0)
        c, sn = math.cos(th), math.sin(th)
        if order == 1:
            return yp0 + r * (sn - sin0), zp0 - r * (c - cos0)
        if order == 2:
            return k * c, k * sn
        if order == 3:
            return -k * t * sn, k * t * c
        raise ValueError(f"derivative order must be 1..3, got {order}")

    params = {"kappa0": k, "tau0": t}
    if initial is not None and initial != IntrinsicState():
        params["initial"] = asdict(initial)
    return Curve(*domain, position, derivative, DerivativeSource.EXACT, "circular-helix", params)


def make_salkowski(
    kappa0: float,
    tau: ScalarSpec,
    domain: tuple[float, float],
    steps: int | None = None,
    initial: IntrinsicState | None = None,
) -> Curve:
    Salkowski(kappa0, tau).validate()
    return _integrated(
        float(kappa0), tau, domain, steps, initial, "salkowski", {"kappa0": float(kappa0)}
    )


def make_anti_salkowski(
    kappa: ScalarSpec,
    tau0: float,
    domain: tuple[float, float],
    steps: int | None = None,
    initial: IntrinsicState | None = None,
) -> Curve:
    AntiSalkowski(kappa, tau0).validate()
    return _integrated(
        kappa, float(tau0), domain, steps, initial, "anti-salkowski", {"tau0": float(tau0)}
    )


def make_family(
    params: FamilyParams,
    domain: tuple[float, float],
    steps: int | None = None,
    initial: IntrinsicState | None = None,
) -> Curve:
    if isinstance(params, GeneralHelix):
        return make_general_helix(params.m, params.kappa, domain, steps, initial)
    if isinstance(params, CircularHelix):
        return make_circular_helix(params.kappa0, params.tau0, domain, initial)
    if isinstance(params, Salkowski):
        return make_salkowski(params.kappa0, params.tau, domain, steps, initial)
    if isinstance(params, AntiSalkowski):
        return make_anti_salkowski(params.kappa, params.tau0, domain, steps, initial)
    raise TypeError(f"unknown family parameters {params!r}")


def example_general_helix(domain: tuple[float, float] = EXAMPLE1_DOMAIN) -> Curve:
    """General helix with ``kappa = 1/s``, ``tau = 2/s``::

        (s, s/10 (-2 cos(2 ln s) + sin(2 ln s)), -s/10 (cos(2 ln s) + 2 sin(2 ln s)))
    """
    if not domain[0] > 0.0:
        raise OutOfDomainError(f"example general helix needs s > 0, got domain {domain}")

    def position(s: float) -> tuple[float, float]:
        c, sn = math.cos(2 * math.log(s)), math.sin(2 * math.log(s))
        return s / 10 * (-2 * c + sn), -s / 10 * (c + 2 * sn)

    def derivative(s: float, order: int) -> tuple[float, float]:
        c, sn = math.cos(2 * math.log(s)), math.sin(2 * math.log(s))
        if order == 1:
            return sn / 2, -c / 2
        if order == 2:
            return c / s, sn / s
        if order == 3:
            return -(c + 2 * sn) / s**2, (2 * c - sn) / s**2
        raise ValueError(f"derivative order must be 1..3, got {order}")

    return Curve(
        *domain, position, derivative, DerivativeSource.EXACT, "example1",
        {"kappa": "1/s", "tau": "2/s"},
    )


def example_anti_salkowski(domain: tuple[float, float] = EXAMPLE2_DOMAIN) -> Curve:
    """Anti-Salkowski curve with ``kappa = exp(-s)``, ``tau = 2``::

        (s, e^-s/25 (-3 cos 2s - 4 sin 2s), e^-s/25 (4 cos 2s - 3 sin 2s))
    """

    def position(s: float) -> tuple[float, float]:
        e, c, sn = math.exp(-s), math.cos(2 * s), math.sin(2 * s)
        return e / 25 * (-3 * c - 4 * sn), e / 25 * (4 * c - 3 * sn)

    def derivative(s: float, order: int) -> tuple[float, float]:
        e, c, sn = math.exp(-s), math.cos(2 * s), math.sin(2 * s)
        if order == 1:
            return -e / 5 * (c - 2 * sn), -e / 5 * (2 * c + sn)
        if order == 2:
            return e * c, e * sn
        if order == 3:
            return -e * (c + 2 * sn), e * (2 * c - sn)
        raise ValueError(f"derivative order must be 1..3, got {order}")

    return Curve(
        *domain, position, derivative, DerivativeSource.EXACT, "example2",
        {"kappa": "exp(-s)", "tau": "2"},
    )
