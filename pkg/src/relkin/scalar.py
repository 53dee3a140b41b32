"""One-dimensional relativistic kinematics in units where c = 1.

Velocities are plain numbers measured as fractions of c. Any finite nonzero
value is an acceptable velocity: slownesses of subluminal speeds exceed 1 and
still compose. Only :func:`boost_event` requires ``|beta| < 1``.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

from .errors import (
    DegenerateDenominatorError,
    RelkinError,
    SuperluminalBoostError,
    ZeroVelocityError,
)

# default absolute tolerance for real 1D identities
TOLERANCE_1D = 1e-12


class Event1D(NamedTuple):
    """A space-time point ``(x, t)``; ``x`` is measured in light-time units."""

    x: float
    t: float


def _check_finite(value, name: str) -> None:
    if not cmath.isfinite(value):
        raise RelkinError(f"{name} must be finite, got {value!r}")


def slowness(beta):
    """Return the reciprocal velocity ``1/beta``, so that ``slowness(b) * b == 1``.

    >>> slowness(0.5)
    2.0
    """
    _check_finite(beta, "beta")
    if beta == 0:
        raise ZeroVelocityError("slowness is undefined for zero velocity")
    return 1 / beta


def compose(u, v, sign: str = "+"):
    """Relativistic composition ``(u ± v) / (1 ± u v)``.

    Works for real or complex arguments; composing with an imaginary velocity
    ``i tan(phi/2)`` is exactly a reciprocity rotation.
    """
    _check_finite(u, "u")
    _check_finite(v, "v")
    if sign == "+":
        num, den = u + v, 1 + u * v
    elif sign == "-":
        num, den = u - v, 1 - u * v
    else:
        raise RelkinError(f"sign must be '+' or '-', got {sign!r}")
    if den == 0:
        raise DegenerateDenominatorError(
            f"1 {sign} u*v vanishes for u={u!r}, v={v!r}"
        )
    return num / den


def lorentz_factor(beta: float) -> float:
    if not abs(beta) < 1:
        raise SuperluminalBoostError(f"boost requires |beta| < 1, got {beta!r}")
    return 1.0 / math.sqrt(1.0 - beta * beta)


def boost_event(e: Event1D, beta: float) -> Event1D:
    """Coordinates of ``e`` seen by an observer moving with velocity ``beta``."""
    _check_finite(e.x, "x")
    _check_finite(e.t, "t")
    gamma = lorentz_factor(beta)
    return Event1D(gamma * (e.x - beta * e.t), gamma * (e.t - beta * e.x))


def interval(e: Event1D) -> float:
    """The invariant ``t**2 - x**2``."""
    return e.t * e.t - e.x * e.x


def reciprocal_symmetry_residual(u, v, sign: str = "+") -> float:
    """``|compose(u, v) - compose(1/u, 1/v)|``; zero up to rounding."""
    direct = compose(u, v, sign)
    mirrored = compose(slowness(u), slowness(v), sign)
    return abs(direct - mirrored)
