"""Slowness, reciprocity rotations and reciprocity-independent Lorentz boosts.

Units have c = 1 throughout. Floating-point routines live in :mod:`relkin.scalar`,
:mod:`relkin.reciprocity`, :mod:`relkin.boost1d` and :mod:`relkin.kin3d`;
:mod:`relkin.oracle` mirrors them in exact rational arithmetic.
"""

from .boost1d import (
    GeneralizedEvent1D,
    g_factor,
    generalized_boost,
    invariance_residual_1d,
)
from .errors import *  # noqa: F401,F403
from .kin3d import (
    CVec3,
    G_factor,
    GeneralizedEvent3D,
    ReciprocityAxis,
    Vec3,
    generalized_boost_3d,
    invariance_residual_3d,
    reciprocal_position_3d,
    reciprocal_velocity_3d,
    rotate_position_3d,
    rotate_velocity_3d,
    standard_boost_3d,
)
from .reciprocity import (
    IDENTITY,
    POLE,
    QUARTER_TURN,
    ReciprocityRotation,
    compose_rotations,
    reciprocal_coordinate,
    rotate_coordinate,
    rotate_velocity,
)
from .scalar import (
    Event1D,
    boost_event,
    compose,
    interval,
    reciprocal_symmetry_residual,
    slowness,
)

__version__ = "0.1.0"
