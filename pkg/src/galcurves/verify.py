"""Golden-example self check behind ``galcurves verify``.

Each check compares the generic machinery (frame extraction, Smarandache
construction, reconstruction) against independently written closed forms
of the two golden curves and of the constant-coefficient helix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import frenet
from .curve_model import (
    example_anti_salkowski,
    example_general_helix,
    make_anti_salkowski,
    make_circular_helix,
    make_general_helix,
    make_salkowski,
)
from .expr import eval_expr, parse
from .gal3 import cross, dot, norm
from .natural_eq import NaturalEquations, reconstruct, round_trip_error
from .smarandache import SmarandacheKind, smarandache_curve, smarandache_point

GOLDEN_TOL = 1e-9


@dataclass(frozen=True)
class CheckResult:
    name: str
    error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.error <= self.tolerance


def _frames_example1(s: float):
    u = math.log(s)
    c2, s2 = math.cos(2 * u), math.sin(2 * u)
    T = (1.0, math.cos(u) * math.sin(u), -0.5 * c2)
    N = (0.0, c2, s2)
    B = (0.0, -s2, c2)
    return T, N, B


def _frames_example2(s: float):
    e, c, sn = math.exp(-s), math.cos(2 * s), math.sin(2 * s)
    T = (1.0, -e / 5 * (c - 2 * sn), -e / 5 * (2 * c + sn))
    return T, (0.0, c, sn), (0.0, -sn, c)


def _smarandache_example1(s: float):
    u = math.log(s)
    cs, c2, s2 = math.cos(u) * math.sin(u), math.cos(2 * u), math.sin(2 * u)
    return {
        SmarandacheKind.TN: (1.0, c2 + cs, -0.5 * c2 + s2),
        SmarandacheKind.TB: (1.0, -cs, 0.5 * c2),
        SmarandacheKind.TNB: (1.0, c2 - cs, 0.5 * c2 + s2),
    }


def _smarandache_example2(s: float):
    e, c, sn = math.exp(-s), math.cos(2 * s), math.sin(2 * s)
    return {
        SmarandacheKind.TN: (1.0, c - e / 5 * (c - 2 * sn), sn - e / 5 * (2 * c + sn)),
        SmarandacheKind.TB: (
            1.0,
            -e / 5 * (c + (-2 + 5 / e) * sn),
            c - e / 5 * (2 * c + sn),
        ),
        SmarandacheKind.TNB: (
            1.0,
            c - e / 5 * (c - 2 * sn) - sn,
            c + sn - e / 5 * (2 * c + sn),
        ),
    }


GOLDEN = (
    ("example1", example_general_helix, lambda s: 1 / s, lambda s: 2 / s,
     _frames_example1, _smarandache_example1),
    ("example2", example_anti_salkowski, lambda s: math.exp(-s), lambda s: 2.0,
     _frames_example2, _smarandache_example2),
)


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def check_natural_equations(tol: float) -> list[CheckResult]:
    out = []
    for name, make, kappa, tau, _, _ in GOLDEN:
        curve = make()
        err = 0.0
        for s in curve.grid(101):
            err = max(err, _rel(frenet.curvature(curve, s), kappa(s)))
            err = max(err, _rel(frenet.torsion(curve, s), tau(s)))
        out.append(CheckResult(f"{name}: kappa, tau (rel)", err, tol))
    return out


def check_frames(tol: float) -> list[CheckResult]:
    out = []
    for name, make, _, _, frames, _ in GOLDEN:
        curve = make()
        err = 0.0
        for s in curve.grid(101):
            f = frenet.frenet_frame(curve, s)
            for got, want in zip((f.T, f.N, f.B), frames(s)):
                err = max(err, float(np.max(np.abs(got.to_array() - want))))
        out.append(CheckResult(f"{name}: Frenet frame", err, tol))
    return out


def check_smarandache(tol: float) -> list[CheckResult]:
    out = []
    for name, make, _, _, _, closed in GOLDEN:
        curve = make()
        for kind in SmarandacheKind:
            poly = smarandache_curve(curve, kind, 101)
            want = np.array([closed(s)[kind] for s in poly.s])
            err = float(np.max(np.abs(poly.points - want)))
            out.append(CheckResult(f"{name}: {kind.name} curve", err, tol))
    return out


def residual_curves():
    return [
        example_general_helix(),
        example_anti_salkowski(),
        make_general_helix(2.0, "1/s", (1.0, 3.0)),
        make_circular_helix(1.0, 1.0, (0.0, 2.0)),
        make_salkowski(1.0, "s", (0.0, 2.0)),
        make_anti_salkowski("exp(-s)", 2.0, (0.0, 2.0)),
    ]


def check_residuals() -> list[CheckResult]:
    out = []
    for curve in residual_curves():
        probes = np.linspace(curve.s_min, curve.s_max, 27)[1:-1]
        err = max(max(frenet.frenet_residuals(curve, s)) for s in probes)
        out.append(CheckResult(f"{curve.family}: Frenet residuals", err, 1e-4))
    return out


def _endpoint_error(n: int) -> float:
    curve = reconstruct(NaturalEquations.of(1.0, 1.0, (0.0, math.pi)), n)
    y, z = curve.yz(math.pi)
    return math.hypot(y - 2.0, z - math.pi)


def check_reconstruction() -> list[CheckResult]:
    out = [CheckResult("reconstruct kappa=tau=1: endpoint", _endpoint_error(4096), 1e-6)]
    errs = [_endpoint_error(n) for n in (512, 1024, 2048)]
    for coarse, fine, n in zip(errs, errs[1:], (512, 1024)):
        ratio = coarse / fine
        # distance outside [12, 20]
        out.append(CheckResult(f"RK4 error ratio {n}->{2 * n} = {ratio:.2f}",
                               max(0.0, 12 - ratio, ratio - 20), 0.0))
    dk, dt = round_trip_error(NaturalEquations.of("exp(-s)", "2", (0.0, 2.0)), 4096, 21)
    out.append(CheckResult("round trip exp(-s), 2", max(dk, dt), 1e-5))
    return out


def check_structure() -> list[CheckResult]:
    worst_cross = worst_orth = worst_norm = 0.0
    for curve in residual_curves():
        for s in curve.grid(25):
            f = frenet.frenet_frame(curve, s)
            bx = cross(f.T, f.N)
            worst_cross = max(worst_cross, float(np.max(np.abs((bx - f.B).to_array()))))
            worst_orth = max(worst_orth, abs(dot(f.N, f.N) - 1), abs(dot(f.B, f.B) - 1),
                             abs(dot(f.N, f.B)))
            for kind in SmarandacheKind:
                p = smarandache_point(f, kind)
                worst_norm = max(worst_norm, abs(norm(p) - 1.0))
    return [
        CheckResult("B = cross(T, N)", worst_cross, 1e-12),
        CheckResult("N, B orthonormal", worst_orth, 1e-9),
        CheckResult("Smarandache norms exactly 1", worst_norm, 0.0),
    ]


def check_degeneration() -> list[CheckResult]:
    dom = (0.0, 2.0)
    ref = make_circular_helix(1.0, 2.0, dom)
    others = [make_salkowski(1.0, 2.0, dom), make_anti_salkowski(1.0, 2.0, dom)]
    err = 0.0
    for s in ref.grid(101):
        p = ref.point(s).to_array()
        for c in others:
            err = max(err, float(np.max(np.abs(c.point(s).to_array() - p))))
    return [CheckResult("Salkowski = anti-Salkowski = circular helix", err, 1e-6)]


def check_parser() -> list[CheckResult]:
    cases: list[tuple[str, float, float]] = [
        ("2+3*4", 0.0, 14.0), ("2^3^2", 0.0, 512.0), ("-2^2", 0.0, -4.0),
        ("1/s", 4.0, 0.25), ("2/s", 2.0, 1.0), ("exp(-s)", 1.0, math.exp(-1.0)), ("2", 7.0, 2.0),
    ]
    err = max(_rel(eval_expr(parse(text), s), want) for text, s, want in cases)
    return [CheckResult("expression evaluation", err, 1e-15)]


SUITE: tuple[Callable[[float], list[CheckResult]], ...] = (
    check_natural_equations,
    check_frames,
    check_smarandache,
)
UNSCALED = (check_residuals, check_reconstruction, check_structure, check_degeneration,
            check_parser)


def run_all(tolerance: float = GOLDEN_TOL) -> list[CheckResult]:
    results = []
    for check in SUITE:
        results.extend(check(tolerance))
    for check in UNSCALED:
        results.extend(check())
    return results
