"""Exceptions raised by the curve machinery."""

from __future__ import annotations


class CurveError(ValueError):
    """Base class; ``s`` is the offending parameter value when one exists."""

    def __init__(self, message: str, s: float | None = None):
        super().__init__(message)
        self.s = s


class EmptyDomainError(CurveError):
    pass


class OutOfDomainError(CurveError):
    pass


class NonFiniteDerivativeError(CurveError):
    pass


class KappaTooSmallError(CurveError):
    pass


class NotAdmissibleError(CurveError):
    pass


class ParameterError(CurveError):
    """Invalid family parameter (e.g. ``m == 0`` or non-positive curvature)."""


class ReconstructionError(CurveError):
    """Integration of natural equations failed; ``s`` is the last good parameter."""
