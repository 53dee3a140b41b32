"""Exact complex-rational reference implementation.

Every floating-point operation of the package has a counterpart here that
works on :class:`fractions.Fraction` values and never rounds. The rotation
parameter is the half-angle tangent ``r`` itself, a Fraction or the marker
:data:`INF` for ``phi = pi``; pole values come from the closed-form limits
(``1/v``, ``t**2/x``, ``V*``, ``X*``) rather than from a homogeneous rewrite,
so this module shares no evaluation path with the float code.

Square roots are taken only of perfect rational squares; anything else
raises :class:`IrrationalRootError`. Pythagorean velocities and the
integer-norm vector families below keep every square root rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import (
    DegenerateDenominatorError,
    DegenerateRotatedVelocityError,
    InvalidParametersError,
    IrrationalRootError,
    PerpendicularAxisError,
    RelkinError,
    SpacelikeInputError,
    SuperluminalBoostError,
    SuperluminalInputError,
    UnknownFamilyError,
    ZeroCoordinateError,
    ZeroTimeError,
    ZeroVelocityError,
)


@dataclass(frozen=True)
class ComplexRational:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def coerce(value) -> ComplexRational:
        if isinstance(value, ComplexRational):
            return value
        if isinstance(value, (Rational, str)):
            return ComplexRational(Fraction(value))
        raise TypeError(f"cannot use {value!r} as an exact complex number")

    def __add__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return ComplexRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("exact complex division by zero")
        return ComplexRational(
            (self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d
        )

    def __rtruediv__(self, other):
        return ComplexRational.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = ComplexRational(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"

    def __str__(self):
        return f"{fraction_str(self.re)} + {fraction_str(self.im)}i"


I = ComplexRational(0, 1)


class _Infinity:
    """Projective marker for ``r = tan(pi/2)``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = _Infinity()


def fraction_str(q) -> str:
    """``'p/q'`` with the denominator always shown, so zero prints as ``'0/1'``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def as_tan(value):
    """Parse a half-angle tangent: a rational, or ``inf`` for the pole."""
    if value is INF or (isinstance(value, str) and value.strip().lower() in ("inf", "oo")):
        return INF
    if isinstance(value, float):
        if math.isinf(value):
            return INF
        raise RelkinError("exact tangents must be rationals, not floats")
    return Fraction(value)


def exact_sqrt(q) -> Fraction:
    q = Fraction(q)
    if q < 0:
        raise IrrationalRootError(f"square root of negative {q}")
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise IrrationalRootError(f"sqrt({q}) is irrational")
    return Fraction(num, den)


# scalar kinematics


def slowness(beta):
    if beta == 0:
        raise ZeroVelocityError("slowness is undefined for zero velocity")
    return 1 / Fraction(beta) if not isinstance(beta, ComplexRational) else 1 / beta


def compose(u, v, sign: str = "+"):
    if sign == "+":
        num, den = u + v, 1 + u * v
    elif sign == "-":
        num, den = u - v, 1 - u * v
    else:
        raise RelkinError(f"sign must be '+' or '-', got {sign!r}")
    if den == 0:
        raise DegenerateDenominatorError(f"1 {sign} u*v vanishes")
    return num / den


def _boost_root(beta) -> Fraction:
    beta = Fraction(beta)
    if not abs(beta) < 1:
        raise SuperluminalBoostError(f"boost requires |beta| < 1, got {beta}")
    return exact_sqrt(1 - beta * beta)


def boost_event(x, t, beta) -> tuple[Fraction, Fraction]:
    root = _boost_root(beta)
    x, t, beta = Fraction(x), Fraction(t), Fraction(beta)
    return (x - beta * t) / root, (t - beta * x) / root


def interval(x, t) -> Fraction:
    return Fraction(t) ** 2 - Fraction(x) ** 2


def reciprocal_symmetry_residual(u, v, sign: str = "+"):
    return compose(u, v, sign) - compose(slowness(u), slowness(v), sign)


# reciprocity rotation, 1D


def rotate_velocity(beta, r):
    r = as_tan(r)
    if r is INF:
        return ComplexRational.coerce(slowness(beta))
    den = 1 + I * beta * r
    if den == 0:
        raise DegenerateDenominatorError("rotation diverges")
    return (beta + I * r) / den


def rotate_coordinate(x, t, r):
    r = as_tan(r)
    x, t = Fraction(x), Fraction(t)
    if t == 0:
        raise ZeroTimeError("x/t is undefined at t = 0")
    if r is INF:
        return ComplexRational(reciprocal_coordinate(x, t))
    return (x + I * t * r) / (1 + I * (x / t) * r)


def reciprocal_coordinate(x, t) -> Fraction:
    if x == 0:
        raise ZeroCoordinateError("the reciprocal of x = 0 is undefined")
    return Fraction(t) ** 2 / Fraction(x)


def compose_tans(a, b):
    """Tangent of the summed half-angles: ``(a + b) / (1 - a b)``."""
    a, b = as_tan(a), as_tan(b)
    if a is INF and b is INF:
        return Fraction(0)
    if a is INF:
        return INF if b == 0 else -1 / b
    if b is INF:
        return INF if a == 0 else -1 / a
    den = 1 - a * b
    if den == 0:
        return INF
    return (a + b) / den


# generalized boost, 1D


def g_factor(x, t, beta, r):
    r = as_tan(r)
    x, t, beta = Fraction(x), Fraction(t), Fraction(beta)
    root = _boost_root(beta)
    if t == 0:
        raise ZeroTimeError("x/t is undefined at t = 0")
    if r is INF:
        return ComplexRational(-(x / t) * beta / root)
    return (1 + I * (x / t) * r) * (1 + I * beta * r) / ((1 + r * r) * root)


def generalized_boost(x, t, beta, r):
    g = g_factor(x, t, beta, r)
    x_rot = rotate_coordinate(x, t, r)
    v_rot = rotate_velocity(Fraction(beta), r)
    t = Fraction(t)
    return g * (x_rot - v_rot * t), g * (t - x_rot * v_rot)


def invariance_residual_1d(x, t, beta, r):
    x_out, t_out = generalized_boost(x, t, beta, r)
    return (t_out**2 - x_out**2) - interval(x, t)


def collapse_difference_1d(x, t, beta, r):
    """Exact differences between the generalized and the standard boost."""
    x_out, t_out = generalized_boost(x, t, beta, r)
    x_std, t_std = boost_event(x, t, beta)
    return x_out - x_std, t_out - t_std


# three dimensions


def _vec(v) -> tuple[Fraction, ...]:
    if len(v) != 3:
        raise RelkinError("vectors must have three components")
    return tuple(Fraction(c) for c in v)


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def unit(n) -> tuple[Fraction, ...]:
    n = _vec(n)
    norm = exact_sqrt(dot(n, n))
    if norm == 0:
        raise RelkinError("axis direction must be nonzero")
    return tuple(c / norm for c in n)


def _speed_root(V) -> Fraction:
    v2 = dot(V, V)
    if v2 > 1:
        raise SuperluminalInputError("|V| must not exceed 1")
    return exact_sqrt(1 - v2)


def _position_root(X, t) -> Fraction:
    if t == 0:
        raise ZeroTimeError("X/t is undefined at t = 0")
    ratio = dot(X, X) / (t * t)
    if ratio > 1:
        raise SpacelikeInputError("|X| must not exceed |t|")
    return exact_sqrt(1 - ratio)


def reciprocal_velocity_3d(V, n) -> tuple[Fraction, ...]:
    V, n = _vec(V), unit(n)
    s = _speed_root(V)
    v2 = dot(V, V)
    if v2 == 0:
        raise ZeroVelocityError("the reciprocal of zero velocity is undefined")
    nv = dot(n, V)
    if nv == 0:
        raise PerpendicularAxisError("axis is perpendicular to V")
    return tuple(((1 - s) * nv / v2 * vi + ni * s) / nv for vi, ni in zip(V, n))


def reciprocal_position_3d(X, t, n) -> tuple[Fraction, ...]:
    X, n, t = _vec(X), unit(n), Fraction(t)
    sigma = _position_root(X, t)
    x2 = dot(X, X)
    if x2 == 0:
        raise ZeroCoordinateError("the reciprocal of X = 0 is undefined")
    nx = dot(n, X)
    if nx == 0:
        raise PerpendicularAxisError("axis is perpendicular to X")
    return tuple(
        t * t * ((1 - sigma) * nx / x2 * xi + ni * sigma) / nx for xi, ni in zip(X, n)
    )


def rotate_velocity_3d(V, n, r) -> tuple[ComplexRational, ...]:
    r = as_tan(r)
    if r is INF:
        return tuple(ComplexRational(c) for c in reciprocal_velocity_3d(V, n))
    V, n = _vec(V), unit(n)
    s = _speed_root(V)
    if r == 0:
        return tuple(ComplexRational(c) for c in V)
    v2 = dot(V, V)
    nv = dot(n, V)
    # (1 - s)(n.V)/V**2 V tends to 0 with V
    k = (1 - s) * nv / v2 if v2 else Fraction(0)
    den = 1 + I * r * nv
    return tuple((vi + I * r * (k * vi + s * ni)) / den for vi, ni in zip(V, n))


def rotate_position_3d(X, t, n, r) -> tuple[ComplexRational, ...]:
    r = as_tan(r)
    if r is INF:
        return tuple(ComplexRational(c) for c in reciprocal_position_3d(X, t, n))
    X, n, t = _vec(X), unit(n), Fraction(t)
    sigma = _position_root(X, t)
    if r == 0:
        return tuple(ComplexRational(c) for c in X)
    x2 = dot(X, X)
    nx = dot(n, X)
    k = (1 - sigma) * nx / x2 if x2 else Fraction(0)
    den = 1 + I * r * nx / t
    return tuple((xi + I * t * r * (k * xi + sigma * ni)) / den for xi, ni in zip(X, n))


def G_factor(X, t, V, n, r):
    r = as_tan(r)
    X, V, n, t = _vec(X), _vec(V), unit(n), Fraction(t)
    if not dot(V, V) < 1:
        raise SuperluminalBoostError("boost requires |V| < 1")
    s = exact_sqrt(1 - dot(V, V))
    if t == 0:
        raise ZeroTimeError("X.n/t is undefined at t = 0")
    if r is INF:
        return ComplexRational(-(dot(X, n) / t) * dot(V, n) / s)
    return (1 + I * r * dot(X, n) / t) * (1 + I * r * dot(V, n)) / ((1 + r * r) * s)


def generalized_boost_3d(X, t, V, n, r):
    G = G_factor(X, t, V, n, r)
    x_rot = rotate_position_3d(X, t, n, r)
    v_rot = rotate_velocity_3d(V, n, r)
    V, t = _vec(V), Fraction(t)
    s = exact_sqrt(1 - dot(V, V))
    xv = dot(x_rot, v_rot)
    vv = dot(v_rot, v_rot)
    if vv == 0:
        raise DegenerateRotatedVelocityError("rotated velocity has zero bilinear square")
    coef = (1 - s) * xv / vv - t
    X_out = tuple(G * (s * xi + coef * vi) for xi, vi in zip(x_rot, v_rot))
    return X_out, G * (t - xv)


def invariance_residual_3d(X, t, V, n, r):
    X_out, t_out = generalized_boost_3d(X, t, V, n, r)
    X, t = _vec(X), Fraction(t)
    return (t_out**2 - dot(X_out, X_out)) - (t * t - dot(X, X))


def standard_boost_3d(X, t, V):
    X, V, t = _vec(X), _vec(V), Fraction(t)
    v2 = dot(V, V)
    if not v2 < 1:
        raise SuperluminalBoostError("boost requires |V| < 1")
    gamma = 1 / exact_sqrt(1 - v2)
    xv = dot(X, V)
    k = (gamma - 1) * xv / v2 if v2 else Fraction(0)
    return tuple(xi + (k - gamma * t) * vi for xi, vi in zip(X, V)), gamma * (t - xv)


def collapse_difference_3d(X, t, V, n, r):
    X_out, t_out = generalized_boost_3d(X, t, V, n, r)
    X_std, t_std = standard_boost_3d(X, t, V)
    return tuple(a - b for a, b in zip(X_out, X_std)) + (t_out - t_std,)


# exact input generators


@dataclass(frozen=True)
class PythagoreanBeta:
    m: int
    n: int
    beta: Fraction
    root: Fraction


def gen_pythagorean_beta(m: int, n: int) -> PythagoreanBeta:
    """``beta = (m**2 - n**2)/(m**2 + n**2)`` with rational ``sqrt(1 - beta**2)``."""
    if not (isinstance(m, int) and isinstance(n, int)) or n < 1 or m <= n:
        raise InvalidParametersError(f"need integers m > n >= 1, got m={m!r}, n={n!r}")
    h = m * m + n * n
    return PythagoreanBeta(m, n, Fraction(m * m - n * n, h), Fraction(2 * m * n, h))


def pythagorean_betas(max_m: int):
    for m in range(2, max_m + 1):
        for n in range(1, m):
            yield gen_pythagorean_beta(m, n)


VECTOR_FAMILIES: dict[tuple[int, int, int], int] = {
    (3, 4, 0): 5,
    (1, 2, 2): 3,
    (2, 3, 6): 7,
    (4, 4, 7): 9,
    (1, 4, 8): 9,
}


def gen_rational_vec3(family_id, scale=1) -> tuple[tuple[Fraction, ...], Fraction]:
    """A scaled integer vector from the built-in table, with its exact norm.

    ``family_id`` is either a table index or the integer vector itself.
    """
    keys = list(VECTOR_FAMILIES)
    if isinstance(family_id, int):
        if not 0 <= family_id < len(keys):
            raise UnknownFamilyError(f"no vector family with index {family_id}")
        key = keys[family_id]
    else:
        key = tuple(family_id)
        if key not in VECTOR_FAMILIES:
            raise UnknownFamilyError(f"unknown vector family {family_id!r}")
    scale = Fraction(scale)
    return tuple(scale * c for c in key), abs(scale) * VECTOR_FAMILIES[key]


OPS = {
    "slowness": slowness,
    "compose": compose,
    "boost_event": boost_event,
    "interval": interval,
    "reciprocal_symmetry_residual": reciprocal_symmetry_residual,
    "rotate_velocity": rotate_velocity,
    "rotate_coordinate": rotate_coordinate,
    "reciprocal_coordinate": reciprocal_coordinate,
    "compose_tans": compose_tans,
    "g_factor": g_factor,
    "generalized_boost": generalized_boost,
    "invariance_residual_1d": invariance_residual_1d,
    "collapse_difference_1d": collapse_difference_1d,
    "reciprocal_velocity_3d": reciprocal_velocity_3d,
    "reciprocal_position_3d": reciprocal_position_3d,
    "rotate_velocity_3d": rotate_velocity_3d,
    "rotate_position_3d": rotate_position_3d,
    "G_factor": G_factor,
    "generalized_boost_3d": generalized_boost_3d,
    "invariance_residual_3d": invariance_residual_3d,
    "standard_boost_3d": standard_boost_3d,
    "collapse_difference_3d": collapse_difference_3d,
}


def oracle_eval(op_id: str, *args, **kwargs):
    """Evaluate the exact counterpart of the operation named ``op_id``."""
    try:
        op = OPS[op_id]
    except KeyError:
        raise RelkinError(f"unknown oracle operation {op_id!r}") from None
    return op(*args, **kwargs)
