"""TN, TB and TNB Smarandache curves built from Frenet frames."""

from __future__ import annotations

import enum

import numpy as np

from .curves import Curve
from .errors import CurveError, NotAdmissibleError
from .frenet import EPS_ADM, FrenetFrame, frenet_frame
from .gal3 import GVec3, norm
from .polyline import Polyline, make_meta


class SmarandacheKind(enum.Enum):
    TN = "tn"
    TB = "tb"
    TNB = "tnb"


def smarandache_point(frame: FrenetFrame, kind: SmarandacheKind) -> GVec3:
    """Normalized frame sum ``(T+N)``, ``(T+B)`` or ``(T+N+B)``.

    ``T`` is the only non-isotropic term, so the Galilean norm of each sum is
    exactly 1 and the division leaves the sum bit-for-bit unchanged.
    """
    if kind is SmarandacheKind.TN:
        v = frame.T + frame.N
    elif kind is SmarandacheKind.TB:
        v = frame.T + frame.B
    else:
        v = frame.T + frame.N + frame.B
    n = norm(v)
    if n == 0.0:
        raise ValueError(f"degenerate frame at s={frame.s!r}: zero frame sum")
    return v / n


def smarandache_curve(curve: Curve, kind: SmarandacheKind, n: int) -> Polyline:
    """Sample the ``kind`` Smarandache curve of ``curve`` at ``n`` uniform parameters.

    Rows are ``(s, x, y, z)`` with ``s`` the parent curve's parameter; ``x``
    is the constant 1 contributed by the tangent.

    Raises:
        NotAdmissibleError: at the first grid point where the parent curve's
            curvature is below ``EPS_ADM`` or its frame cannot be built.
    """
    rows = []
    for s in curve.grid(n):
        s = float(s)
        try:
            frame = frenet_frame(curve, s)
        except CurveError as exc:
            raise NotAdmissibleError(f"parent curve not admissible at s={s!r}: {exc}", s) from exc
        if frame.kappa < EPS_ADM:
            raise NotAdmissibleError(
                f"parent curve not admissible at s={s!r}: kappa={frame.kappa!r}", s
            )
        p = smarandache_point(frame, kind)
        rows.append((s, p.x1, p.x2, p.x3))
    meta = make_meta(curve.family, kind.name, {"parent": dict(curve.params)})
    return Polyline(np.array(rows), meta)
