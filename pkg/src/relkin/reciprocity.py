"""Rotation of velocities and coordinates in reciprocity space.

The rotation through ``phi`` is the Moebius map

    z -> (z + i r) / (1 + i z r),    r = tan(phi/2),

which fixes ``z = +1`` and ``z = -1``. It is stored as the half-angle pair
``(sin(phi/2), cos(phi/2))`` and every map is evaluated in homogeneous form,
so ``phi = pi`` (``r = inf``) is an ordinary case that sends a velocity to its
slowness.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateDenominatorError,
    RelkinError,
    CoordinateOverflowError,
    ZeroCoordinateError,
    ZeroTimeError,
    ZeroVelocityError,
)
from .scalar import Event1D

TWO_PI = 2.0 * math.pi
_SQRT_HALF = math.sqrt(0.5)

# exact half-angle pairs for the quarter turns
_QUARTER_PAIRS = {
    0: (0.0, 1.0),
    1: (_SQRT_HALF, _SQRT_HALF),
    2: (1.0, 0.0),
    3: (_SQRT_HALF, -_SQRT_HALF),
}


def _canonical(num: float, den: float) -> tuple[float, float]:
    norm = math.hypot(num, den)
    if norm == 0.0 or not math.isfinite(norm):
        raise RelkinError(f"half-angle pair ({num!r}, {den!r}) cannot be normalized")
    num, den = num / norm, den / norm
    # half-angle lives in [0, pi): keep sin >= 0, and cos = +1 at phi = 0
    if num < 0.0 or (num == 0.0 and den < 0.0):
        num, den = -num, -den
    return num + 0.0, den + 0.0


@dataclass(frozen=True)
class ReciprocityRotation:
    """Angle ``phi`` in ``[0, 2 pi)`` with its unit half-angle pair."""

    phi: float
    half_num: float
    half_den: float

    @classmethod
    def from_angle(cls, phi: float) -> ReciprocityRotation:
        if not math.isfinite(phi):
            raise RelkinError(f"phi must be finite, got {phi!r}")
        phi = phi % TWO_PI
        for k, pair in _QUARTER_PAIRS.items():
            if phi == k * (math.pi / 2):
                return cls(phi, *pair)
        half = phi / 2
        return cls(phi, *_canonical(math.sin(half), math.cos(half)))

    @classmethod
    def from_pi_fraction(cls, frac: Fraction | int) -> ReciprocityRotation:
        """Rotation by ``frac * pi``; multiples of ``pi/2`` are exact."""
        frac = Fraction(frac) % 2
        if (2 * frac).denominator == 1:
            k = int(2 * frac)
            return cls(k * (math.pi / 2), *_QUARTER_PAIRS[k])
        return cls.from_angle(float(frac) * math.pi)

    @classmethod
    def from_pair(cls, half_num: float, half_den: float) -> ReciprocityRotation:
        """Rotation from any nonzero multiple of ``(sin(phi/2), cos(phi/2))``."""
        num, den = _canonical(half_num, half_den)
        return cls(2.0 * math.atan2(num, den), num, den)

    @classmethod
    def from_tan(cls, r: float) -> ReciprocityRotation:
        """Rotation with ``tan(phi/2) = r``; ``r = inf`` gives the pole."""
        if math.isinf(r):
            return cls(math.pi, 1.0, 0.0)
        return cls.from_pair(r, 1.0)

    @property
    def is_pole(self) -> bool:
        return self.half_den == 0.0

    @property
    def tan_half(self) -> float:
        """``r = tan(phi/2)``; infinite at the pole."""
        if self.is_pole:
            return math.inf
        return self.half_num / self.half_den


IDENTITY = ReciprocityRotation(0.0, 0.0, 1.0)
QUARTER_TURN = ReciprocityRotation.from_pi_fraction(Fraction(1, 2))
POLE = ReciprocityRotation.from_pi_fraction(1)


def compose_rotations(a: ReciprocityRotation, b: ReciprocityRotation) -> ReciprocityRotation:
    """The rotation through ``a.phi + b.phi``, by half-angle addition."""
    num = a.half_num * b.half_den + a.half_den * b.half_num
    den = a.half_den * b.half_den - a.half_num * b.half_num
    num, den = _canonical(num, den)
    return ReciprocityRotation((a.phi + b.phi) % TWO_PI, num, den)


def rotate_velocity(beta, rot: ReciprocityRotation) -> complex:
    """Rotate a (possibly complex) velocity through ``rot``.

    Evaluates ``(v cos + i sin) / (cos + i v sin)`` with the half-angle pair,
    the homogeneous form of ``(v + i r) / (1 + i v r)``.
    """
    s, c = rot.half_num, rot.half_den
    den = c + 1j * beta * s
    if den == 0:
        if beta == 0:
            raise ZeroVelocityError("the reciprocal of zero velocity is undefined")
        raise DegenerateDenominatorError(f"rotation of {beta!r} through {rot.phi!r} diverges")
    return (beta * c + 1j * s) / den


def rotate_coordinate(e: Event1D, rot: ReciprocityRotation) -> complex:
    """Rotate the position of ``e`` through ``rot``.

    Homogeneous form of ``(x + i t r) / (1 + i (x/t) r)``, multiplied through
    by ``t cos``; at the pole this is ``t**2 / x``.
    """
    x, t = e
    if t == 0:
        raise ZeroTimeError("x/t is undefined at t = 0")
    s, c = rot.half_num, rot.half_den
    if s == 0:
        # identity; the general form would round t * x / t
        return complex(x)
    den = t * c + 1j * x * s
    if den == 0:
        raise ZeroCoordinateError("the reciprocal of x = 0 is undefined")
    out = t * (x * c + 1j * t * s) / den
    if not cmath.isfinite(out):
        raise CoordinateOverflowError(f"rotated coordinate overflows for x={x!r}, t={t!r}")
    return out


def reciprocal_coordinate(e: Event1D) -> float:
    """``t**2 / x``, the position whose product with ``x`` is ``t**2``."""
    if e.x == 0:
        raise ZeroCoordinateError("the reciprocal of x = 0 is undefined")
    out = e.t * e.t / e.x
    if not math.isfinite(out):
        raise CoordinateOverflowError(f"t**2 / x overflows for x={e.x!r}, t={e.t!r}")
    return out
