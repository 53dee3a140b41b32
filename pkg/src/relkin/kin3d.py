"""Reciprocals, reciprocity rotations and generalized boosts in three dimensions.

Conventions (c = 1):

* dot products of complex vectors are bilinear, ``sum(a_i * b_i)``, with no
  conjugation, so squared intervals are algebraic squares;
* ``(1 - s) / V**2`` with ``s = sqrt(1 - V**2)`` is evaluated as
  ``1 / (1 + s)``, which removes the removable singularity at ``V = 0``;
* the reciprocity vector ``tan(phi/2) n`` enters through the half-angle pair
  of the axis rotation, so ``phi = pi`` is exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    DegenerateRotatedVelocityError,
    PerpendicularAxisError,
    RelkinError,
    SpacelikeInputError,
    SuperluminalBoostError,
    SuperluminalInputError,
    CoordinateOverflowError,
    ZeroCoordinateError,
    ZeroTimeError,
    ZeroVelocityError,
)
from .reciprocity import ReciprocityRotation

AXIS_NORM_TOLERANCE = 1e-14


class Vec3(NamedTuple):
    x: float
    y: float
    z: float


class CVec3(NamedTuple):
    x: complex
    y: complex
    z: complex


class GeneralizedEvent3D(NamedTuple):
    X_out: CVec3
    t_out: complex


def dot(a, b):
    """Bilinear dot product; no complex conjugation."""
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _check_vector(v, name: str) -> None:
    isfinite = cmath.isfinite
    if not (isfinite(v[0]) and isfinite(v[1]) and isfinite(v[2])):
        raise RelkinError(f"{name} must have finite components, got {tuple(v)!r}")


@dataclass(frozen=True)
class ReciprocityAxis:
    """Unit direction ``n`` together with a rotation angle.

    ``n`` is normalized on construction; the reciprocity vector of the
    formalism is ``tan(phi/2) n``.
    """

    n: Vec3
    rot: ReciprocityRotation

    def __post_init__(self):
        _check_vector(self.n, "axis")
        norm = math.sqrt(dot(self.n, self.n))
        if norm == 0.0:
            raise RelkinError("axis direction must be nonzero")
        if abs(norm - 1.0) > AXIS_NORM_TOLERANCE:
            object.__setattr__(self, "n", Vec3(*(c / norm for c in self.n)))
        else:
            object.__setattr__(self, "n", Vec3(*self.n))

    @property
    def r_vector(self) -> Vec3:
        if self.rot.is_pole:
            raise RelkinError("the reciprocity vector is infinite at phi = pi")
        r = self.rot.tan_half
        return Vec3(*(r * c for c in self.n))


def _velocity_root(V) -> float:
    _check_vector(V, "V")
    v2 = dot(V, V)
    if v2 > 1.0:
        raise SuperluminalInputError(f"|V| must not exceed 1, got {math.sqrt(v2)!r}")
    return math.sqrt(1.0 - v2)


def _position_root(X, t) -> float:
    _check_vector(X, "X")
    if not math.isfinite(t):
        raise RelkinError(f"t must be finite, got {t!r}")
    if t == 0:
        raise ZeroTimeError("X/t is undefined at t = 0")
    ratio = dot(X, X) / (t * t)
    if ratio > 1.0:
        raise SpacelikeInputError(f"|X| must not exceed |t| (|X|/|t| = {math.sqrt(ratio)!r})")
    return math.sqrt(1.0 - ratio)


def reciprocal_velocity_3d(V: Vec3, axis: ReciprocityAxis) -> Vec3:
    """The vector ``V*`` with ``V* . V = 1``, built along the axis direction.

    Depends on the axis only through ``n``; the rotation angle is ignored.
    """
    s = _velocity_root(V)
    if dot(V, V) == 0:
        raise ZeroVelocityError("the reciprocal of zero velocity is undefined")
    n = axis.n
    nv = dot(n, V)
    if nv == 0:
        raise PerpendicularAxisError("axis is perpendicular to V")
    k = nv / (1.0 + s)
    return Vec3(*((k * vi + s * ni) / nv for vi, ni in zip(V, n)))


def reciprocal_position_3d(X: Vec3, t: float, axis: ReciprocityAxis) -> Vec3:
    """The vector ``X*`` with ``X* . X = t**2``."""
    sigma = _position_root(X, t)
    if dot(X, X) == 0:
        raise ZeroCoordinateError("the reciprocal of X = 0 is undefined")
    n = axis.n
    nx = dot(n, X)
    if nx == 0:
        raise PerpendicularAxisError("axis is perpendicular to X")
    k = nx / (1.0 + sigma)
    t2 = t * t
    return _finite_position(Vec3(*((k * xi + t2 * sigma * ni) / nx for xi, ni in zip(X, n))))


def rotate_velocity_3d(V: Vec3, axis: ReciprocityAxis) -> CVec3:
    """Rotate a real velocity vector through the axis rotation.

    Identity at ``phi = 0``, :func:`reciprocal_velocity_3d` at ``phi = pi``.
    """
    s = _velocity_root(V)
    n = axis.n
    hs, hc = axis.rot.half_num, axis.rot.half_den
    nv = dot(n, V)
    den = hc + 1j * hs * nv
    if den == 0:
        if dot(V, V) == 0:
            raise ZeroVelocityError("the reciprocal of zero velocity is undefined")
        raise PerpendicularAxisError("axis is perpendicular to V at phi = pi")
    k = nv / (1.0 + s)
    return CVec3(*((hc * vi + 1j * hs * (k * vi + s * ni)) / den for vi, ni in zip(V, n)))


def rotate_position_3d(X: Vec3, t: float, axis: ReciprocityAxis) -> CVec3:
    """Rotate a position vector at time ``t`` through the axis rotation."""
    sigma = _position_root(X, t)
    n = axis.n
    hs, hc = axis.rot.half_num, axis.rot.half_den
    if hs == 0:
        # identity; the general form would round t * x / t
        return CVec3(*(complex(c) for c in X))
    nx = dot(n, X)
    den = hc * t + 1j * hs * nx
    if den == 0:
        if dot(X, X) == 0:
            raise ZeroCoordinateError("the reciprocal of X = 0 is undefined")
        raise PerpendicularAxisError("axis is perpendicular to X at phi = pi")
    k = nx / (1.0 + sigma)
    t2 = t * t
    return _finite_position(
        CVec3(*((hc * t * xi + 1j * hs * (k * xi + t2 * sigma * ni)) / den for xi, ni in zip(X, n)))
    )


def _finite_position(out):
    if not (cmath.isfinite(out[0]) and cmath.isfinite(out[1]) and cmath.isfinite(out[2])):
        raise CoordinateOverflowError("position overflows; X.n is too close to 0")
    return out


def G_factor(X: Vec3, t: float, V: Vec3, axis: ReciprocityAxis) -> complex:
    _check_vector(X, "X")
    _check_vector(V, "V")
    v2 = dot(V, V)
    if not v2 < 1.0:
        raise SuperluminalBoostError(f"boost requires |V| < 1, got {math.sqrt(v2)!r}")
    if t == 0:
        raise ZeroTimeError("X.n/t is undefined at t = 0")
    n = axis.n
    hs, hc = axis.rot.half_num, axis.rot.half_den
    first = hc + 1j * hs * dot(X, n) / t
    second = hc + 1j * hs * dot(V, n)
    return first * second / ((hs * hs + hc * hc) * math.sqrt(1.0 - v2))


def generalized_boost_3d(X: Vec3, t: float, V: Vec3, axis: ReciprocityAxis) -> GeneralizedEvent3D:
    """Boost ``(X, t)`` by ``V`` in the reciprocity state of ``axis``.

    The square root multiplying the rotated position uses the real input
    velocity, not its rotated counterpart.
    """
    G = G_factor(X, t, V, axis)
    x_rot = rotate_position_3d(X, t, axis)
    v_rot = rotate_velocity_3d(V, axis)
    v2 = dot(V, V)
    s = math.sqrt(1.0 - v2)
    one_minus_s = v2 / (1.0 + s)
    xv = dot(x_rot, v_rot)
    vv = dot(v_rot, v_rot)
    if vv == 0:
        raise DegenerateRotatedVelocityError("rotated velocity has zero bilinear square")
    coef = one_minus_s * xv / vv - t
    X_out = _finite_position(CVec3(*(G * (s * xi + coef * vi) for xi, vi in zip(x_rot, v_rot))))
    t_out = G * (t - xv)
    if not cmath.isfinite(t_out):
        raise CoordinateOverflowError("boosted time overflows; X.n is too close to 0")
    return GeneralizedEvent3D(X_out, t_out)


def invariance_residual_3d(X: Vec3, t: float, V: Vec3, axis: ReciprocityAxis) -> complex:
    """``(t_out**2 - X_out . X_out) - (t**2 - X . X)``, bilinear throughout."""
    out = generalized_boost_3d(X, t, V, axis)
    return (out.t_out**2 - dot(out.X_out, out.X_out)) - (t * t - dot(X, X))


def standard_boost_3d(X: Vec3, t: float, V: Vec3) -> tuple[Vec3, float]:
    """Pure boost of the event ``(X, t)`` into the frame moving with ``V``."""
    _check_vector(X, "X")
    v2 = dot(V, V)
    if not v2 < 1.0:
        raise SuperluminalBoostError(f"boost requires |V| < 1, got {math.sqrt(v2)!r}")
    s = math.sqrt(1.0 - v2)
    gamma = 1.0 / s
    # (gamma - 1) / V**2 == gamma / (1 + s)
    k = gamma / (1.0 + s) * dot(X, V) - gamma * t
    return Vec3(*(xi + k * vi for xi, vi in zip(X, V))), gamma * (t - dot(X, V))


def collapse_residual_3d(X: Vec3, t: float, V: Vec3, axis: ReciprocityAxis) -> float:
    """Largest deviation of the generalized 3D boost from the standard boost."""
    out = generalized_boost_3d(X, t, V, axis)
    X_std, t_std = standard_boost_3d(X, t, V)
    devs = [abs(a - b) for a, b in zip(out.X_out, X_std)]
    devs.append(abs(out.t_out - t_std))
    return max(devs)
