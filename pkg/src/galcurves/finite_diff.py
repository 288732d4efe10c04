"""Finite-difference stencils on a uniform step.

Weights are solved exactly in rationals and only then rounded, which keeps
the third-derivative stencil from amplifying weight round-off by ``1/h**3``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

class StencilError(ValueError):
    """The domain is too short to hold the stencil."""


# (derivative order) -> (number of stencil points, accuracy order)
STENCILS = {1: (5, 4), 2: (5, 4), 3: (5, 2)}


def step_size(s: float) -> float:
    return 1e-3 * max(1.0, abs(s))


@lru_cache(maxsize=None)
def weights(offsets: tuple[int, ...], order: int) -> tuple[float, ...]:
    """Weights ``w`` with ``f^(order)(s) ~ sum(w[i] * f(s + offsets[i]*h)) / h**order``."""
    n = len(offsets)
    if order >= n:
        raise ValueError(f"{n} points cannot resolve derivative order {order}")
    # Taylor matching: sum_i w_i * k_i**j / j! = [j == order]
    a = [[Fraction(k) ** j / math.factorial(j) for k in offsets] for j in range(n)]
    b = [Fraction(int(j == order)) for j in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        b[col], b[pivot] = b[pivot], b[col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] -= f * b[col]
    return tuple(float(b[i] / a[i][i]) for i in range(n))


def offsets_for(order: int, s: float, h: float, lo: float, hi: float) -> tuple[int, ...]:
    """Stencil offsets for ``order`` at ``s``, shifted to stay inside ``[lo, hi]``.

    Central 5-point stencils are used where they fit.  Near an edge the
    stencil slides inward; an off-centre second-derivative stencil needs a
    sixth point to stay fourth-order.
    """
    points, accuracy = STENCILS[order]
    central = tuple(range(-(points // 2), points // 2 + 1))
    if s + central[0] * h >= lo and s + central[-1] * h <= hi:
        return central
    npts = order + accuracy
    if hi - lo < (npts - 1) * h:
        raise StencilError(
            f"domain [{lo}, {hi}] too short for a {npts}-point stencil with step {h}"
        )
    first = -(npts // 2)
    while s + first * h < lo:
        first += 1
    while s + (first + npts - 1) * h > hi:
        first -= 1
    return tuple(range(first, first + npts))


def derivative(
    f: Callable[[float], float | np.ndarray],
    s: float,
    order: int,
    lo: float = -math.inf,
    hi: float = math.inf,
    h: float | None = None,
):
    """Approximate the ``order``-th derivative of ``f`` at ``s``.

    ``f`` may return a scalar or an array; sampling never leaves ``[lo, hi]``.
    """
    if h is None:
        h = step_size(s)
    offs = offsets_for(order, s, h, lo, hi)
    w = weights(offs, order)
    acc = 0.0
    for k, wk in zip(offs, w):
        if wk != 0.0:
            x = min(max(s + k * h, lo), hi)
            acc = acc + wk * np.asarray(f(x), dtype=float)
    return acc / h**order

