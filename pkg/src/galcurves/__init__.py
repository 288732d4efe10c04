"""Curve geometry in the Galilean 3-space: frames, natural equations and Smarandache curves."""

__version__ = "0.1.0"

from .curve_model import (  # noqa: E402
    AntiSalkowski,
    CircularHelix,
    GeneralHelix,
    Salkowski,
    example_anti_salkowski,
    example_general_helix,
    make_anti_salkowski,
    make_circular_helix,
    make_family,
    make_general_helix,
    make_salkowski,
)
from .curves import Curve  # noqa: E402
from .frenet import (  # noqa: E402
    FrenetFrame,
    check_admissible,
    curvature,
    derivatives,
    frenet_frame,
    frenet_residuals,
    torsion,
)
from .gal3 import GVec3, classify, cross, dot, norm  # noqa: E402
from .natural_eq import IntrinsicState, NaturalEquations, reconstruct, round_trip_error  # noqa: E402
from .polyline import Polyline  # noqa: E402
from .smarandache import SmarandacheKind, smarandache_curve, smarandache_point  # noqa: E402
