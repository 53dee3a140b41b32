"""Hypothesis strategies shared by the property tests."""

import math
from fractions import Fraction

from hypothesis import assume
from hypothesis import strategies as st

from relkin import oracle
from relkin.kin3d import Vec3
from relkin.reciprocity import ReciprocityRotation

SPECIAL_ANGLES = [0.0, math.pi / 2, math.pi, 3 * math.pi / 2]


def betas(limit=0.99, floor=1e-6):
    return st.floats(-limit, limit).filter(lambda b: abs(b) >= floor)


def nonzero_reals(limit=50.0):
    return st.floats(-limit, limit).filter(lambda b: abs(b) >= 1e-3)


@st.composite
def timelike_events(draw, t_min=0.25, t_max=4.0):
    t = draw(st.floats(t_min, t_max))
    w = draw(st.floats(-0.99, 0.99))
    return t * w, t


@st.composite
def nonzero_events(draw):
    x, t = draw(timelike_events())
    if abs(x) < 1e-3:
        x = math.copysign(1e-3, x or 1.0)
    return x, t


def angles():
    return st.one_of(st.sampled_from(SPECIAL_ANGLES), st.floats(0.0, 2 * math.pi))


def rotations():
    return angles().map(ReciprocityRotation.from_angle)


@st.composite
def unit_vectors(draw):
    # uniform on the sphere when z and the azimuth are uniform
    z = draw(st.floats(-1.0, 1.0))
    az = draw(st.floats(0.0, 2 * math.pi))
    rho = math.sqrt(1.0 - z * z)
    return Vec3(rho * math.cos(az), rho * math.sin(az), z)


def _abs_cos(a, b):
    return abs(sum(x * y for x, y in zip(a, b)))


@st.composite
def configs_3d(draw, min_cosine=0.1):
    """Generic ``(X, t, V, n)`` with the axis well away from perpendicular."""
    v_dir = draw(unit_vectors())
    x_dir = draw(unit_vectors())
    n = draw(unit_vectors())
    assume(_abs_cos(n, v_dir) >= min_cosine and _abs_cos(n, x_dir) >= min_cosine)
    speed = draw(st.floats(1e-3, 0.99))
    t = draw(st.floats(0.25, 4.0))
    w = draw(st.floats(1e-3, 0.99))
    X = Vec3(*(t * w * c for c in x_dir))
    V = Vec3(*(speed * c for c in v_dir))
    return X, t, V, n


# exact inputs


def pythagorean_betas(max_m=10, signed=True):
    pairs = st.integers(2, max_m).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m - 1)))
    beta = pairs.map(lambda mn: oracle.gen_pythagorean_beta(*mn).beta)
    if signed:
        return st.tuples(beta, st.booleans()).map(lambda bs: -bs[0] if bs[1] else bs[0])
    return beta


@st.composite
def integer_events(draw, max_t=20):
    t = draw(st.integers(2, max_t))
    x = draw(st.integers(1, t - 1)) * draw(st.sampled_from([-1, 1]))
    return Fraction(x), Fraction(t)


def rational_tans():
    small = st.fractions(min_value=-8, max_value=8, max_denominator=12)
    return st.one_of(st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]), small)
