"""Vector algebra in the Galilean 3-space.

A vector ``(x1, x2, x3)`` is *non-isotropic* when its first ("time")
component is nonzero and *isotropic* otherwise.  The inner product, cross
product and norm all switch branch on that classification, and the switch
uses exact comparison with zero: near-isotropic vectors are the caller's
problem.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np


class VectorClass(enum.Enum):
    NON_ISOTROPIC = "non-isotropic"
    ISOTROPIC = "isotropic"


@dataclass(frozen=True)
class GVec3:
    """Immutable vector with components ``x1`` (Galilean) and ``x2, x3`` (Euclidean)."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self) -> None:
        for name in ("x1", "x2", "x3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"GVec3 component {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_iterable(cls, values) -> GVec3:
        x1, x2, x3 = values
        return cls(x1, x2, x3)

    def __iter__(self) -> Iterator[float]:
        yield self.x1
        yield self.x2
        yield self.x3

    def __add__(self, other: GVec3) -> GVec3:
        return GVec3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: GVec3) -> GVec3:
        return GVec3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> GVec3:
        return GVec3(-self.x1, -self.x2, -self.x3)

    def __mul__(self, k: float) -> GVec3:
        return GVec3(k * self.x1, k * self.x2, k * self.x3)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> GVec3:
        return GVec3(self.x1 / k, self.x2 / k, self.x3 / k)

    def to_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])

    @property
    def is_isotropic(self) -> bool:
        return self.x1 == 0.0


def classify(p: GVec3) -> VectorClass:
    return VectorClass.ISOTROPIC if p.x1 == 0.0 else VectorClass.NON_ISOTROPIC


def dot(p: GVec3, q: GVec3) -> float:
    """Galilean inner product.

    ``p1*q1`` if either first component is nonzero, otherwise the Euclidean
    product of the remaining two components.
    """
    if p.x1 != 0.0 or q.x1 != 0.0:
        return p.x1 * q.x1
    return p.x2 * q.x2 + p.x3 * q.x3


def cross(p: GVec3, q: GVec3) -> GVec3:
    """Galilean cross product.

    With a non-isotropic operand the determinant has first row ``(0, e2, e3)``
    so the result is isotropic; with two isotropic operands it is the
    ordinary Euclidean cross product.
    """
    e2 = p.x3 * q.x1 - p.x1 * q.x3
    e3 = p.x1 * q.x2 - p.x2 * q.x1
    if p.x1 != 0.0 or q.x1 != 0.0:
        return GVec3(0.0, e2, e3)
    return GVec3(p.x2 * q.x3 - p.x3 * q.x2, e2, e3)


def norm(p: GVec3) -> float:
    if p.x1 != 0.0:
        return abs(p.x1)
    return math.hypot(p.x2, p.x3)
