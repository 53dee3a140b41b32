"""Angle grids and seeded admissible inputs for residual sweeps.

Float inputs:
    velocities uniform in (-0.99, 0.99) with |beta| >= 1e-6; times uniform in
    [0.25, 1]; positions ``x = w t`` with ``w`` uniform in (-0.99, 0.99), so
    every event is timelike. 3D directions are uniform on the sphere and
    the axis keeps a direction cosine of at least 0.1 with both ``V`` and
    ``X``, which keeps the pole reciprocals well conditioned.

Exact inputs:
    Pythagorean velocities with ``m <= 10``, integer events ``0 < |x| < t <= 20``,
    and unit vectors from the integer-norm families under random signed
    permutations, so every square root is rational.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import oracle
from .reciprocity import ReciprocityRotation

BETA_MAX = 0.99
BETA_MIN = 1e-6
MIN_AXIS_COSINE = 0.1
EXACT_TAN_DENOMINATOR = 16


@dataclass(frozen=True)
class GridPoint:
    """One angle of the sweep grid, in both float and exact form."""

    index: int
    pi_fraction: Fraction
    rot: ReciprocityRotation
    tan: object  # Fraction or oracle.INF

    @property
    def phi(self) -> float:
        return self.rot.phi


def _exact_tan(pi_fraction: Fraction):
    half = pi_fraction / 2 % 1
    if half == 0:
        return Fraction(0)
    if half == Fraction(1, 2):
        return oracle.INF
    if half == Fraction(1, 4):
        return Fraction(1)
    if half == Fraction(3, 4):
        return Fraction(-1)
    return Fraction(math.tan(math.pi * half)).limit_denominator(EXACT_TAN_DENOMINATOR)


def phi_grid(count: int) -> list[GridPoint]:
    """``count`` equally spaced angles over [0, 2 pi), always with 0, pi/2 and pi.

    In exact mode, grid angles other than multiples of pi/2 are stood in for
    by a nearby rational half-angle tangent.
    """
    if count < 1:
        raise ValueError("phi grid needs at least one point")
    fracs = {Fraction(2 * k, count) for k in range(count)}
    fracs |= {Fraction(0), Fraction(1, 2), Fraction(1)}
    return [
        GridPoint(i, f, ReciprocityRotation.from_pi_fraction(f), _exact_tan(f))
        for i, f in enumerate(sorted(fracs))
    ]


def rotation_for_tan(tan) -> ReciprocityRotation:
    """Float rotation with the given exact half-angle tangent."""
    if tan is oracle.INF:
        return ReciprocityRotation.from_tan(math.inf)
    return ReciprocityRotation.from_pair(tan.numerator, tan.denominator)


def check_rng(seed: int, name: str) -> random.Random:
    # str seeds are hashed with sha512, stable across processes
    return random.Random(f"relkin:{seed}:{name}")


# float samplers


def float_beta(rng: random.Random) -> float:
    while True:
        b = rng.uniform(-BETA_MAX, BETA_MAX)
        if abs(b) >= BETA_MIN:
            return b


def float_event(rng: random.Random) -> tuple[float, float]:
    t = rng.uniform(0.25, 1.0)
    return t * rng.uniform(-BETA_MAX, BETA_MAX), t


def float_direction(rng: random.Random) -> tuple[float, float, float]:
    """Uniform on the unit sphere (Archimedes: z is uniform)."""
    z = rng.uniform(-1.0, 1.0)
    az = rng.uniform(0.0, 2.0 * math.pi)
    rho = math.sqrt(1.0 - z * z)
    return (rho * math.cos(az), rho * math.sin(az), z)


def _cos(a, b) -> float:
    return abs(sum(x * y for x, y in zip(a, b)))


def float_config_3d(rng: random.Random) -> dict:
    """Generic configuration: independent directions for V, X and the axis."""
    v_dir = float_direction(rng)
    x_dir = float_direction(rng)
    while True:
        n = float_direction(rng)
        if _cos(n, v_dir) >= MIN_AXIS_COSINE and _cos(n, x_dir) >= MIN_AXIS_COSINE:
            break
    speed = abs(float_beta(rng))
    t = rng.uniform(0.25, 1.0)
    w = rng.uniform(0.0, BETA_MAX)
    return {
        "X": tuple(t * w * c for c in x_dir),
        "t": t,
        "V": tuple(speed * c for c in v_dir),
        "n": n,
    }


def float_worldline_3d(rng: random.Random) -> dict:
    """Event on the worldline of the moving body, ``X = V t``; the axis is generic."""
    cfg = float_config_3d(rng)
    cfg["X"] = tuple(cfg["t"] * c for c in cfg["V"])
    return cfg


def float_collinear_3d(rng: random.Random) -> dict:
    """``V``, ``X`` and the axis all along one coordinate axis."""
    k = rng.randrange(3)
    sign_n = rng.choice((-1.0, 1.0))
    beta = float_beta(rng)
    x, t = float_event(rng)

    def along(value):
        return tuple(value if i == k else 0.0 for i in range(3))

    return {"X": along(x), "t": t, "V": along(beta), "n": along(sign_n), "axis_index": k}


# exact samplers

_SIGNED_PERMUTATIONS = [
    (perm, signs)
    for perm in itertools.permutations(range(3))
    for signs in itertools.product((1, -1), repeat=3)
]
_FAMILY_UNITS = [
    tuple(Fraction(c) / norm for c in vec)
    for vec, norm in (oracle.gen_rational_vec3(i) for i in range(len(oracle.VECTOR_FAMILIES)))
]


def exact_beta(rng: random.Random, max_m: int = 10) -> Fraction:
    m = rng.randint(2, max_m)
    n = rng.randint(1, m - 1)
    beta = oracle.gen_pythagorean_beta(m, n).beta
    return beta if rng.random() < 0.5 else -beta


def exact_event(rng: random.Random, max_t: int = 20) -> tuple[Fraction, Fraction]:
    t = rng.randint(2, max_t)
    x = rng.randint(1, t - 1) * rng.choice((-1, 1))
    return Fraction(x), Fraction(t)


def exact_direction(rng: random.Random) -> tuple[Fraction, ...]:
    unit = rng.choice(_FAMILY_UNITS)
    perm, signs = rng.choice(_SIGNED_PERMUTATIONS)
    return tuple(s * unit[p] for p, s in zip(perm, signs))


def _is_parallel(a, b) -> bool:
    cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    return not any(cross)


def exact_config_3d(rng: random.Random) -> dict:
    """Non-collinear rational configuration: ``X`` not parallel to ``V``."""
    while True:
        v_dir, x_dir, n = (exact_direction(rng) for _ in range(3))
        if _is_parallel(v_dir, x_dir):
            continue
        if oracle.dot(n, v_dir) == 0 or oracle.dot(n, x_dir) == 0:
            continue
        break
    speed = abs(exact_beta(rng))
    t = Fraction(rng.randint(1, 20))
    w = abs(exact_beta(rng))
    return {
        "X": tuple(t * w * c for c in x_dir),
        "t": t,
        "V": tuple(speed * c for c in v_dir),
        "n": n,
    }


def exact_worldline_3d(rng: random.Random) -> dict:
    cfg = exact_config_3d(rng)
    cfg["X"] = tuple(cfg["t"] * c for c in cfg["V"])
    return cfg


def exact_collinear_3d(rng: random.Random) -> dict:
    k = rng.randrange(3)
    sign_n = rng.choice((-1, 1))
    beta = exact_beta(rng)
    t = Fraction(rng.randint(1, 20))
    # |X|/t must be a Pythagorean ratio for sqrt(1 - (X/t)**2) to be rational
    x = t * exact_beta(rng)

    def along(value):
        return tuple(Fraction(value) if i == k else Fraction(0) for i in range(3))

    return {"X": along(x), "t": t, "V": along(beta), "n": along(sign_n), "axis_index": k}
