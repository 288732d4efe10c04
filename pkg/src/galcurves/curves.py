"""The :class:`Curve` type: an admissible curve in graph form ``s -> (s, y(s), z(s))``."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .errors import EmptyDomainError, OutOfDomainError
from .gal3 import GVec3

# (s) -> (y, z)
PositionFn = Callable[[float], tuple[float, float]]
# (s, order) -> (y^(order), z^(order)) for order in 1..3
DerivativeFn = Callable[[float, int], tuple[float, float]]


class DerivativeSource(enum.Enum):
    EXACT = "exact"  # closed-form, hand-differentiated
    STATE = "state"  # read from an ODE state and its right-hand side
    FINITE_DIFFERENCE = "finite-difference"


@dataclass(frozen=True)
class Curve:
    """A curve in arc-length graph form on the closed interval ``[s_min, s_max]``.

    Only ``y`` and ``z`` are stored; the first coordinate is ``s`` by
    construction, so ``point(s).x1 == s`` always holds exactly.  When
    ``derivative_fn`` is ``None`` the frenet layer synthesizes derivatives by
    finite differences of ``position_fn``.
    """

    s_min: float
    s_max: float
    position_fn: PositionFn
    derivative_fn: DerivativeFn | None = None
    source: DerivativeSource = DerivativeSource.FINITE_DIFFERENCE
    family: str = "custom"
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        s_min, s_max = float(self.s_min), float(self.s_max)
        if not (math.isfinite(s_min) and math.isfinite(s_max)):
            raise EmptyDomainError(f"domain [{s_min}, {s_max}] is not finite")
        if s_min > s_max:
            raise EmptyDomainError(f"domain [{s_min}, {s_max}] is empty")
        object.__setattr__(self, "s_min", s_min)
        object.__setattr__(self, "s_max", s_max)
        if self.derivative_fn is None:
            object.__setattr__(self, "source", DerivativeSource.FINITE_DIFFERENCE)

    @property
    def domain(self) -> tuple[float, float]:
        return self.s_min, self.s_max

    def contains(self, s: float) -> bool:
        return self.s_min <= s <= self.s_max

    def require(self, s: float) -> float:
        s = float(s)
        if not self.contains(s):
            raise OutOfDomainError(
                f"s={s!r} outside domain [{self.s_min}, {self.s_max}] of {self.family}", s
            )
        return s

    def yz(self, s: float) -> tuple[float, float]:
        """``(y(s), z(s))`` without the constant graph coordinate."""
        y, z = self.position_fn(self.require(s))
        return float(y), float(z)

    def point(self, s: float) -> GVec3:
        s = self.require(s)
        y, z = self.position_fn(s)
        return GVec3(s, y, z)

    def grid(self, n: int) -> np.ndarray:
        if n < 2:
            raise ValueError(f"grid needs at least 2 samples, got {n}")
        if not self.s_min < self.s_max:
            raise EmptyDomainError(f"degenerate domain [{self.s_min}, {self.s_max}]")
        return np.linspace(self.s_min, self.s_max, n)

    def sample(self, n: int) -> np.ndarray:
        """``(n, 4)`` array of rows ``(s, x, y, z)`` on a uniform inclusive grid."""
        rows = []
        for s in self.grid(n):
            p = self.point(s)
            rows.append((s, p.x1, p.x2, p.x3))
        return np.array(rows, dtype=float)
