"""Lorentz transformation valid in every reciprocity state, one space dimension.

The rotated coordinate and velocity are complex for ``0 < phi < pi``; the
complex factor :func:`g_factor` compensates so that the transformed pair
keeps the interval ``t**2 - x**2``. Outputs stay complex. That they collapse
to the ordinary boost is checked by the test suite, not assumed here.
"""

from __future__ import annotations

import cmath
from typing import NamedTuple

from .errors import CoordinateOverflowError, ZeroTimeError
from .reciprocity import ReciprocityRotation, rotate_coordinate, rotate_velocity
from .scalar import Event1D, lorentz_factor


class GeneralizedEvent1D(NamedTuple):
    x_out: complex
    t_out: complex


def g_factor(e: Event1D, beta: float, rot: ReciprocityRotation) -> complex:
    """Complex generalization of the Lorentz factor.

    ``(cos + i (x/t) sin)(cos + i beta sin) / ((sin**2 + cos**2) sqrt(1 - beta**2))``
    with the half-angle pair; equals ``1/sqrt(1 - beta**2)`` at ``phi = 0``.
    """
    gamma = lorentz_factor(beta)
    if e.t == 0:
        raise ZeroTimeError("x/t is undefined at t = 0")
    s, c = rot.half_num, rot.half_den
    return (c + 1j * (e.x / e.t) * s) * (c + 1j * beta * s) * gamma / (s * s + c * c)


def generalized_boost(e: Event1D, beta: float, rot: ReciprocityRotation) -> GeneralizedEvent1D:
    g = g_factor(e, beta, rot)
    x_rot = rotate_coordinate(e, rot)
    v_rot = rotate_velocity(beta, rot)
    x_out, t_out = g * (x_rot - v_rot * e.t), g * (e.t - x_rot * v_rot)
    if not (cmath.isfinite(x_out) and cmath.isfinite(t_out)):
        raise CoordinateOverflowError(f"boost overflows for x={e.x!r}, t={e.t!r}")
    return GeneralizedEvent1D(x_out, t_out)


def invariance_residual_1d(e: Event1D, beta: float, rot: ReciprocityRotation) -> complex:
    """``(t_out**2 - x_out**2) - (t**2 - x**2)`` in complex arithmetic."""
    out = generalized_boost(e, beta, rot)
    return (out.t_out**2 - out.x_out**2) - (e.t * e.t - e.x * e.x)


def collapse_residual_1d(e: Event1D, beta: float, rot: ReciprocityRotation) -> float:
    """Largest deviation of the generalized boost from the standard one."""
    out = generalized_boost(e, beta, rot)
    gamma = lorentz_factor(beta)
    x_std = gamma * (e.x - beta * e.t)
    t_std = gamma * (e.t - beta * e.x)
    return max(abs(out.x_out - x_std), abs(out.t_out - t_std))


__all__ = [
    "GeneralizedEvent1D",
    "g_factor",
    "generalized_boost",
    "invariance_residual_1d",
    "collapse_residual_1d",
]
