"""Curves from natural equations: integrate curvature and torsion into a position.

The nested antiderivatives of the reconstruction formula are carried as one
first-order system in the state ``(theta, y, z, y', z')``::

    theta' = tau(s)
    y''    = kappa(s) * cos(theta)
    z''    = kappa(s) * sin(theta)

and stepped with classical fixed-step RK4.  By default every state
component starts at zero at ``s0``, i.e. every antiderivative vanishes
there.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from . import finite_diff, frenet
from .curves import Curve, DerivativeSource
from .errors import EmptyDomainError, ParameterError, ReconstructionError
from .expr import ExprError, describe, scalar_function

ScalarFn = Callable[[float], float]


@dataclass(frozen=True)
class IntrinsicState:
    """Turning angle ``theta``, position ``(y, z)`` and slopes ``(yp, zp)``."""

    theta: float = 0.0
    y: float = 0.0
    z: float = 0.0
    yp: float = 0.0
    zp: float = 0.0

    def __post_init__(self) -> None:
        for name, value in asdict(self).items():
            if not math.isfinite(value):
                raise ValueError(f"initial {name} must be finite, got {value!r}")

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.theta, self.y, self.z, self.yp, self.zp)


@dataclass(frozen=True)
class NaturalEquations:
    kappa: ScalarFn
    tau: ScalarFn
    s0: float
    s1: float

    @classmethod
    def of(cls, kappa, tau, domain: tuple[float, float]) -> NaturalEquations:
        """Build from expression text, numbers or callables."""
        s0, s1 = domain
        return cls(scalar_function(kappa), scalar_function(tau), float(s0), float(s1))

    def kappa_prime(self, s: float) -> float:
        if hasattr(self.kappa, "constant"):
            return 0.0
        return float(finite_diff.derivative(self.kappa, s, 1, self.s0, self.s1))


class Trajectory:
    """RK4 node states plus local re-integration between nodes.

    A query at ``s`` takes one RK4 step of size ``s - s_k`` from the node
    ``s_k`` below it, so off-node values keep the fourth-order accuracy of
    the node values.
    """

    def __init__(self, eqs: NaturalEquations, n: int, initial: IntrinsicState):
        self.eqs = eqs
        self.n = n
        self.h = (eqs.s1 - eqs.s0) / n
        self.nodes = eqs.s0 + self.h * np.arange(n + 1)
        self.nodes[-1] = eqs.s1
        self.states = np.empty((n + 1, 5))
        self._last_good = float(eqs.s0)
        self._integrate(initial.as_tuple())

    def _kappa(self, s: float) -> float:
        k = self.eqs.kappa(s)
        if not k > 0.0:
            raise ParameterError(f"curvature must be positive, got kappa({s!r}) = {k!r}", s)
        return k

    def rhs(self, s: float, x) -> tuple[float, float, float, float, float]:
        theta, _, _, yp, zp = x
        try:
            k = self._kappa(s)
            t = self.eqs.tau(s)
        except ExprError as exc:
            raise ReconstructionError(
                f"natural equations failed at s={s!r}: {exc}", self._last_good
            ) from exc
        return (t, yp, zp, k * math.cos(theta), k * math.sin(theta))

    def increment(self, s: float, x, dt: float) -> list[float]:
        k1 = self.rhs(s, x)
        k2 = self.rhs(s + dt / 2, [a + dt / 2 * b for a, b in zip(x, k1)])
        k3 = self.rhs(s + dt / 2, [a + dt / 2 * b for a, b in zip(x, k2)])
        k4 = self.rhs(s + dt, [a + dt * b for a, b in zip(x, k3)])
        return [dt / 6 * (p + 2 * q + 2 * r + w) for p, q, r, w in zip(k1, k2, k3, k4)]

    def step(self, s: float, x, dt: float) -> tuple[float, ...]:
        return tuple(a + d for a, d in zip(x, self.increment(s, x, dt)))

    def _integrate(self, x0) -> None:
        # Kahan-compensated accumulation: at n ~ 1e3 plain summation
        # round-off is already visible against the O(h^4) truncation error
        x = list(x0)
        comp = [0.0] * 5
        self.states[0] = x
        for k in range(self.n):
            s = float(self.nodes[k])
            d = self.increment(s, x, float(self.nodes[k + 1]) - s)
            for i in range(5):
                inc = d[i] - comp[i]
                total = x[i] + inc
                comp[i] = (total - x[i]) - inc
                x[i] = total
            if not all(math.isfinite(v) for v in x):
                raise ReconstructionError(
                    f"state blew up after s={self._last_good!r}", self._last_good
                )
            self.states[k + 1] = x
            self._last_good = float(self.nodes[k + 1])

    def state_at(self, s: float) -> tuple[float, ...]:
        k = int((s - self.eqs.s0) / self.h) if self.h > 0 else 0
        k = min(max(k, 0), self.n)
        if self.nodes[k] == s:
            return tuple(self.states[k])
        if k == self.n:
            k -= 1
        sk = float(self.nodes[k])
        return self.step(sk, tuple(self.states[k]), s - sk)

    def position(self, s: float) -> tuple[float, float]:
        x = self.state_at(s)
        return x[1], x[2]

    def derivative(self, s: float, order: int) -> tuple[float, float]:
        theta, _, _, yp, zp = self.state_at(s)
        if order == 1:
            return yp, zp
        k = self._kappa(s)
        c, sn = math.cos(theta), math.sin(theta)
        if order == 2:
            return k * c, k * sn
        if order == 3:
            dk = self.eqs.kappa_prime(s)
            kt = k * self.eqs.tau(s)
            return dk * c - kt * sn, dk * sn + kt * c
        raise ValueError(f"derivative order must be 1..3, got {order}")


def reconstruct(
    eqs: NaturalEquations,
    n: int,
    initial: IntrinsicState | None = None,
    family: str = "natural-equations",
    params: dict | None = None,
) -> Curve:
    """Integrate ``eqs`` with ``n`` fixed RK4 steps over ``[s0, s1]``.

    Raises:
        EmptyDomainError: if ``s0 >= s1``.
        ParameterError: if ``kappa <= 0`` at any evaluation point.
        ReconstructionError: on expression failure or a non-finite state;
            its ``s`` is the last node integrated successfully.
    """
    if n < 2:
        raise ValueError(f"step count must be at least 2, got {n}")
    if not eqs.s0 < eqs.s1:
        raise EmptyDomainError(f"degenerate domain [{eqs.s0}, {eqs.s1}]")
    initial = initial or IntrinsicState()
    traj = Trajectory(eqs, n, initial)
    meta = {"kappa": describe(eqs.kappa), "tau": describe(eqs.tau), "steps": n}
    if initial != IntrinsicState():
        meta["initial"] = asdict(initial)
    meta.update(params or {})
    return Curve(
        eqs.s0,
        eqs.s1,
        traj.position,
        traj.derivative,
        DerivativeSource.STATE,
        family,
        meta,
    )


def round_trip_error(eqs: NaturalEquations, n: int, m: int) -> tuple[float, float]:
    """Reconstruct, re-extract curvature and torsion at ``m`` interior probes.

    Returns the maximum absolute ``(kappa, tau)`` errors against the inputs.
    """
    if not eqs.s0 < eqs.s1:
        raise EmptyDomainError(f"degenerate domain [{eqs.s0}, {eqs.s1}]")
    curve = reconstruct(eqs, n)
    probes = np.linspace(eqs.s0, eqs.s1, m + 2)[1:-1]
    dk = max(abs(frenet.curvature(curve, s) - eqs.kappa(s)) for s in probes)
    dt = max(abs(frenet.torsion(curve, s) - eqs.tau(s)) for s in probes)
    return dk, dt
