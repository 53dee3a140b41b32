"""Residual sweeps over the angle grid and seeded admissible inputs.

Every check pairs a sampler with a residual: a quantity that vanishes when
the identity holds. Checks run in float mode (residual compared with a
tolerance) or exact mode (residual must be exactly zero). Records come out in
``(phi_index, sample_index)`` order whatever the number of worker threads.

Checks marked ``asserted=False`` are reported but do not affect the verdict.
The generic three-dimensional invariance and collapse checks are of that kind:
the exact oracle shows both fail for configurations that are neither
collinear nor on the worldline ``X = V t``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from importlib import resources
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import boost1d, kin3d, oracle, reciprocity, sampling, scalar
from .errors import RelkinError
from .kin3d import ReciprocityAxis, Vec3
from .oracle import ComplexRational
from .reciprocity import IDENTITY, POLE, QUARTER_TURN
from .sampling import GridPoint

SCHEMA_VERSION = "relkin.report/1"
MODES = ("float", "exact")


@dataclass(frozen=True)
class SweepConfig:
    phi_count: int = 64
    sample_count: int = 100
    seed: int = 0
    tolerance: float = 1e-10
    mode: str = "float"
    workers: int = 1

    def __post_init__(self):
        if self.phi_count < 1:
            raise ValueError(f"phi_count must be positive, got {self.phi_count}")
        if self.sample_count < 1:
            raise ValueError(f"sample_count must be positive, got {self.sample_count}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if not (self.tolerance >= 0 and math.isfinite(self.tolerance)):
            raise ValueError(f"tolerance must be a finite non-negative number, got {self.tolerance}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")


# number formatting


def fmt(value, mode: str):
    """Render a number for reports: 17 significant digits or an exact fraction."""
    if value is None:
        return None
    if value is oracle.INF:
        return "inf"
    if isinstance(value, ComplexRational):
        return [oracle.fraction_str(value.re), oracle.fraction_str(value.im)]
    if isinstance(value, complex):
        return [f"{value.real:.17g}", f"{value.imag:.17g}"]
    if isinstance(value, Fraction) and mode == "exact":
        return oracle.fraction_str(value)
    if isinstance(value, int) and mode == "exact":
        return oracle.fraction_str(value)
    return f"{float(value):.17g}"


def _parts(value):
    if isinstance(value, ComplexRational):
        return value.re, value.im
    if isinstance(value, complex):
        return value.real, value.imag
    return value, 0


def magnitude(value, mode: str):
    """Modulus in float mode; exact max(|re|, |im|) in exact mode."""
    if mode == "exact":
        re, im = _parts(value)
        return max(abs(Fraction(re)), abs(Fraction(im)))
    return abs(value)


def _worst(diffs, mode: str):
    return max(diffs, key=lambda d: magnitude(d, mode))


# check catalogue


@dataclass(frozen=True)
class Check:
    name: str
    identity: str
    uses_phi: bool
    sample_float: Callable
    sample_exact: Callable
    eval_float: Callable
    eval_exact: Callable
    asserted: bool = True


def _beta_pair_f(rng, grid):
    return {"u": sampling.float_beta(rng), "v": sampling.float_beta(rng)}


def _beta_pair_e(rng, grid):
    return {"u": sampling.exact_beta(rng), "v": sampling.exact_beta(rng)}


def _event_beta_f(rng, grid):
    x, t = sampling.float_event(rng)
    return {"x": x, "t": t, "beta": sampling.float_beta(rng)}


def _event_beta_e(rng, grid):
    x, t = sampling.exact_event(rng)
    return {"x": x, "t": t, "beta": sampling.exact_beta(rng)}


def _group_f(rng, grid):
    return {"beta": sampling.float_beta(rng), "b_index": rng.randrange(len(grid))}


def _group_e(rng, grid):
    return {"beta": sampling.exact_beta(rng), "b_index": rng.randrange(len(grid))}


def _wrap(sampler):
    return lambda rng, grid: sampler(rng)


def _event(s):
    return scalar.Event1D(s["x"], s["t"])


# each evaluator returns (outputs, residual)


def _symmetry_f(s, p):
    direct = scalar.compose(s["u"], s["v"])
    mirrored = scalar.compose(scalar.slowness(s["u"]), scalar.slowness(s["v"]))
    return {"direct": direct, "mirrored": mirrored}, direct - mirrored


def _symmetry_e(s, p):
    direct = oracle.compose(s["u"], s["v"])
    mirrored = oracle.compose(oracle.slowness(s["u"]), oracle.slowness(s["v"]))
    return {"direct": direct, "mirrored": mirrored}, direct - mirrored


def _interval_f(s, p):
    out = scalar.boost_event(_event(s), s["beta"])
    return {"x_out": out.x, "t_out": out.t}, scalar.interval(out) - scalar.interval(_event(s))


def _interval_e(s, p):
    x_out, t_out = oracle.boost_event(s["x"], s["t"], s["beta"])
    return {"x_out": x_out, "t_out": t_out}, oracle.interval(x_out, t_out) - oracle.interval(
        s["x"], s["t"]
    )


def _inverse_f(s, p):
    back = scalar.boost_event(scalar.boost_event(_event(s), s["beta"]), -s["beta"])
    return {"x_back": back.x, "t_back": back.t}, _worst([back.x - s["x"], back.t - s["t"]], "float")


def _inverse_e(s, p):
    x1, t1 = oracle.boost_event(s["x"], s["t"], s["beta"])
    x2, t2 = oracle.boost_event(x1, t1, -s["beta"])
    return {"x_back": x2, "t_back": t2}, _worst([x2 - s["x"], t2 - s["t"]], "exact")


def _pole_velocity_f(s, p):
    rotated = reciprocity.rotate_velocity(s["beta"], POLE)
    slow = scalar.slowness(s["beta"])
    return {"rotated": rotated, "slowness": slow}, rotated - slow


def _pole_velocity_e(s, p):
    rotated = oracle.rotate_velocity(s["beta"], oracle.INF)
    slow = oracle.slowness(s["beta"])
    return {"rotated": rotated, "slowness": slow}, rotated - slow


def _pole_coordinate_f(s, p):
    rotated = reciprocity.rotate_coordinate(_event(s), POLE)
    recip = reciprocity.reciprocal_coordinate(_event(s))
    return {"rotated": rotated, "reciprocal": recip}, rotated - recip


def _pole_coordinate_e(s, p):
    rotated = oracle.rotate_coordinate(s["x"], s["t"], oracle.INF)
    recip = oracle.reciprocal_coordinate(s["x"], s["t"])
    return {"rotated": rotated, "reciprocal": recip}, rotated - recip


def _quarter_f(s, p):
    z = reciprocity.rotate_velocity(s["beta"], QUARTER_TURN)
    return {"rotated": z}, abs(z) - 1.0


def _quarter_e(s, p):
    z = oracle.rotate_velocity(s["beta"], 1)
    # exact check on the squared modulus
    return {"rotated": z}, z.re * z.re + z.im * z.im - 1


def _group_law_f(s, p, grid):
    b = grid[s["b_index"]].rot
    lhs = reciprocity.rotate_velocity(reciprocity.rotate_velocity(s["beta"], p.rot), b)
    rhs = reciprocity.rotate_velocity(s["beta"], reciprocity.compose_rotations(p.rot, b))
    return {"sequential": lhs, "combined": rhs}, lhs - rhs


def _group_law_e(s, p, grid):
    b = grid[s["b_index"]].tan
    lhs = oracle.rotate_velocity(oracle.rotate_velocity(s["beta"], p.tan), b)
    rhs = oracle.rotate_velocity(s["beta"], oracle.compose_tans(p.tan, b))
    return {"sequential": lhs, "combined": rhs}, lhs - rhs


def _invariance_1d_f(s, p):
    out = boost1d.generalized_boost(_event(s), s["beta"], p.rot)
    res = (out.t_out**2 - out.x_out**2) - scalar.interval(_event(s))
    return {"x_out": out.x_out, "t_out": out.t_out}, res


def _invariance_1d_e(s, p):
    x_out, t_out = oracle.generalized_boost(s["x"], s["t"], s["beta"], p.tan)
    res = (t_out**2 - x_out**2) - oracle.interval(s["x"], s["t"])
    return {"x_out": x_out, "t_out": t_out}, res


def _collapse_1d_f(s, p):
    out = boost1d.generalized_boost(_event(s), s["beta"], p.rot)
    std = scalar.boost_event(_event(s), s["beta"])
    return {"x_out": out.x_out, "t_out": out.t_out}, _worst(
        [out.x_out - std.x, out.t_out - std.t], "float"
    )


def _collapse_1d_e(s, p):
    x_out, t_out = oracle.generalized_boost(s["x"], s["t"], s["beta"], p.tan)
    dx, dt = oracle.collapse_difference_1d(s["x"], s["t"], s["beta"], p.tan)
    return {"x_out": x_out, "t_out": t_out}, _worst([dx, dt], "exact")


def _axis(s, rot=IDENTITY):
    return ReciprocityAxis(Vec3(*s["n"]), rot)


def _dot_velocity_f(s, p):
    recip = kin3d.reciprocal_velocity_3d(Vec3(*s["V"]), _axis(s))
    return _vec_outputs("recip", recip), kin3d.dot(recip, s["V"]) - 1.0


def _dot_velocity_e(s, p):
    recip = oracle.reciprocal_velocity_3d(s["V"], s["n"])
    return _vec_outputs("recip", recip), oracle.dot(recip, s["V"]) - 1


def _dot_position_f(s, p):
    recip = kin3d.reciprocal_position_3d(Vec3(*s["X"]), s["t"], _axis(s))
    return _vec_outputs("recip", recip), kin3d.dot(recip, s["X"]) - s["t"] ** 2


def _dot_position_e(s, p):
    recip = oracle.reciprocal_position_3d(s["X"], s["t"], s["n"])
    return _vec_outputs("recip", recip), oracle.dot(recip, s["X"]) - s["t"] ** 2


def _pole_velocity_3d_f(s, p):
    rotated = kin3d.rotate_velocity_3d(Vec3(*s["V"]), _axis(s, POLE))
    recip = kin3d.reciprocal_velocity_3d(Vec3(*s["V"]), _axis(s))
    return _vec_outputs("rotated", rotated), _worst([a - b for a, b in zip(rotated, recip)], "float")


def _pole_velocity_3d_e(s, p):
    rotated = oracle.rotate_velocity_3d(s["V"], s["n"], oracle.INF)
    recip = oracle.reciprocal_velocity_3d(s["V"], s["n"])
    return _vec_outputs("rotated", rotated), _worst([a - b for a, b in zip(rotated, recip)], "exact")


def _pole_position_3d_f(s, p):
    rotated = kin3d.rotate_position_3d(Vec3(*s["X"]), s["t"], _axis(s, POLE))
    recip = kin3d.reciprocal_position_3d(Vec3(*s["X"]), s["t"], _axis(s))
    return _vec_outputs("rotated", rotated), _worst([a - b for a, b in zip(rotated, recip)], "float")


def _pole_position_3d_e(s, p):
    rotated = oracle.rotate_position_3d(s["X"], s["t"], s["n"], oracle.INF)
    recip = oracle.reciprocal_position_3d(s["X"], s["t"], s["n"])
    return _vec_outputs("rotated", rotated), _worst([a - b for a, b in zip(rotated, recip)], "exact")


def _vec_outputs(prefix, vec):
    return {f"{prefix}_{c}": v for c, v in zip("xyz", vec)}


def _gboost_outputs(X_out, t_out):
    out = _vec_outputs("X_out", X_out)
    out["t_out"] = t_out
    return out


def _invariance_3d_f(s, p):
    out = kin3d.generalized_boost_3d(Vec3(*s["X"]), s["t"], Vec3(*s["V"]), _axis(s, p.rot))
    res = (out.t_out**2 - kin3d.dot(out.X_out, out.X_out)) - (s["t"] ** 2 - kin3d.dot(s["X"], s["X"]))
    return _gboost_outputs(out.X_out, out.t_out), res


def _invariance_3d_e(s, p):
    X_out, t_out = oracle.generalized_boost_3d(s["X"], s["t"], s["V"], s["n"], p.tan)
    res = (t_out**2 - oracle.dot(X_out, X_out)) - (s["t"] ** 2 - oracle.dot(s["X"], s["X"]))
    return _gboost_outputs(X_out, t_out), res


def _collapse_3d_f(s, p):
    out = kin3d.generalized_boost_3d(Vec3(*s["X"]), s["t"], Vec3(*s["V"]), _axis(s, p.rot))
    X_std, t_std = kin3d.standard_boost_3d(Vec3(*s["X"]), s["t"], Vec3(*s["V"]))
    diffs = [a - b for a, b in zip(out.X_out, X_std)] + [out.t_out - t_std]
    return _gboost_outputs(out.X_out, out.t_out), _worst(diffs, "float")


def _collapse_3d_e(s, p):
    X_out, t_out = oracle.generalized_boost_3d(s["X"], s["t"], s["V"], s["n"], p.tan)
    diffs = oracle.collapse_difference_3d(s["X"], s["t"], s["V"], s["n"], p.tan)
    return _gboost_outputs(X_out, t_out), _worst(list(diffs), "exact")


def _identity_3d_f(s, p):
    return _collapse_3d_f(s, sampling.GridPoint(0, Fraction(0), IDENTITY, Fraction(0)))


def _identity_3d_e(s, p):
    return _collapse_3d_e(s, sampling.GridPoint(0, Fraction(0), IDENTITY, Fraction(0)))


def _collinear_reduction_f(s, p):
    k = s["axis_index"]
    rot = p.rot
    if s["n"][k] < 0:
        rot = reciprocity.ReciprocityRotation.from_pair(-rot.half_num, rot.half_den)
    out = kin3d.generalized_boost_3d(Vec3(*s["X"]), s["t"], Vec3(*s["V"]), _axis(s, p.rot))
    ref = boost1d.generalized_boost(scalar.Event1D(s["X"][k], s["t"]), s["V"][k], rot)
    expected = [ref.x_out if i == k else 0.0 for i in range(3)] + [ref.t_out]
    got = list(out.X_out) + [out.t_out]
    return _gboost_outputs(out.X_out, out.t_out), _worst(
        [a - b for a, b in zip(got, expected)], "float"
    )


def _collinear_reduction_e(s, p):
    k = s["axis_index"]
    tan = p.tan
    if s["n"][k] < 0 and tan is not oracle.INF:
        tan = -tan
    X_out, t_out = oracle.generalized_boost_3d(s["X"], s["t"], s["V"], s["n"], p.tan)
    x_ref, t_ref = oracle.generalized_boost(s["X"][k], s["t"], s["V"][k], tan)
    expected = [x_ref if i == k else ComplexRational(0) for i in range(3)] + [t_ref]
    got = list(X_out) + [t_out]
    return _gboost_outputs(X_out, t_out), _worst([a - b for a, b in zip(got, expected)], "exact")


def _g_reduction_f(s, p):
    k = s["axis_index"]
    rot = p.rot
    if s["n"][k] < 0:
        rot = reciprocity.ReciprocityRotation.from_pair(-rot.half_num, rot.half_den)
    G = kin3d.G_factor(Vec3(*s["X"]), s["t"], Vec3(*s["V"]), _axis(s, p.rot))
    g = boost1d.g_factor(scalar.Event1D(s["X"][k], s["t"]), s["V"][k], rot)
    return {"G": G, "g": g}, G - g


def _g_reduction_e(s, p):
    k = s["axis_index"]
    tan = p.tan
    if s["n"][k] < 0 and tan is not oracle.INF:
        tan = -tan
    G = oracle.G_factor(s["X"], s["t"], s["V"], s["n"], p.tan)
    g = oracle.g_factor(s["X"][k], s["t"], s["V"][k], tan)
    return {"G": G, "g": g}, G - g


CHECKS: list[Check] = [
    Check(
        "reciprocal_symmetry",
        "compose(u, v) == compose(1/u, 1/v)",
        False,
        _beta_pair_f,
        _beta_pair_e,
        _symmetry_f,
        _symmetry_e,
    ),
    Check(
        "interval_invariance",
        "interval(boost_event(e, beta)) == interval(e)",
        False,
        _event_beta_f,
        _event_beta_e,
        _interval_f,
        _interval_e,
    ),
    Check(
        "inverse_boost",
        "boost_event(boost_event(e, beta), -beta) == e",
        False,
        _event_beta_f,
        _event_beta_e,
        _inverse_f,
        _inverse_e,
    ),
    Check(
        "pole_velocity",
        "rotate_velocity(beta, pi) == slowness(beta)",
        False,
        _event_beta_f,
        _event_beta_e,
        _pole_velocity_f,
        _pole_velocity_e,
    ),
    Check(
        "pole_coordinate",
        "rotate_coordinate(e, pi) == reciprocal_coordinate(e)",
        False,
        _event_beta_f,
        _event_beta_e,
        _pole_coordinate_f,
        _pole_coordinate_e,
    ),
    Check(
        "quarter_turn_modulus",
        "|rotate_velocity(beta, pi/2)| == 1",
        False,
        _event_beta_f,
        _event_beta_e,
        _quarter_f,
        _quarter_e,
    ),
    Check(
        "group_law",
        "rotate(rotate(beta, a), b) == rotate(beta, a + b)",
        True,
        _group_f,
        _group_e,
        _group_law_f,
        _group_law_e,
    ),
    Check(
        "invariance_1d",
        "t_out**2 - x_out**2 == t**2 - x**2 for the generalized 1D boost",
        True,
        _event_beta_f,
        _event_beta_e,
        _invariance_1d_f,
        _invariance_1d_e,
    ),
    Check(
        "collapse_1d",
        "generalized_boost == boost_event for every phi",
        True,
        _event_beta_f,
        _event_beta_e,
        _collapse_1d_f,
        _collapse_1d_e,
    ),
    Check(
        "dot_velocity_3d",
        "V* . V == 1",
        False,
        _wrap(sampling.float_config_3d),
        _wrap(sampling.exact_config_3d),
        _dot_velocity_f,
        _dot_velocity_e,
    ),
    Check(
        "dot_position_3d",
        "X* . X == t**2",
        False,
        _wrap(sampling.float_config_3d),
        _wrap(sampling.exact_config_3d),
        _dot_position_f,
        _dot_position_e,
    ),
    Check(
        "pole_velocity_3d",
        "rotate_velocity_3d(V, pi) == reciprocal_velocity_3d(V)",
        False,
        _wrap(sampling.float_config_3d),
        _wrap(sampling.exact_config_3d),
        _pole_velocity_3d_f,
        _pole_velocity_3d_e,
    ),
    Check(
        "pole_position_3d",
        "rotate_position_3d(X, t, pi) == reciprocal_position_3d(X, t)",
        False,
        _wrap(sampling.float_config_3d),
        _wrap(sampling.exact_config_3d),
        _pole_position_3d_f,
        _pole_position_3d_e,
    ),
    Check(
        "identity_boost_3d",
        "generalized_boost_3d at phi = 0 == standard vector boost",
        False,
        _wrap(sampling.float_config_3d),
        _wrap(sampling.exact_config_3d),
        _identity_3d_f,
        _identity_3d_e,
    ),
    Check(
        "collinear_reduction_3d",
        "collinear generalized_boost_3d == 1D generalized_boost on the axis",
        True,
        _wrap(sampling.float_collinear_3d),
        _wrap(sampling.exact_collinear_3d),
        _collinear_reduction_f,
        _collinear_reduction_e,
    ),
    Check(
        "g_reduction_3d",
        "collinear G_factor == 1D g_factor on the axis",
        True,
        _wrap(sampling.float_collinear_3d),
        _wrap(sampling.exact_collinear_3d),
        _g_reduction_f,
        _g_reduction_e,
    ),
    Check(
        "invariance_3d_collinear",
        "3D interval invariance, V, X and axis collinear",
        True,
        _wrap(sampling.float_collinear_3d),
        _wrap(sampling.exact_collinear_3d),
        _invariance_3d_f,
        _invariance_3d_e,
    ),
    Check(
        "invariance_3d_worldline",
        "3D interval invariance on the worldline X = V t, generic axis",
        True,
        _wrap(sampling.float_worldline_3d),
        _wrap(sampling.exact_worldline_3d),
        _invariance_3d_f,
        _invariance_3d_e,
    ),
    Check(
        "invariance_3d_general",
        "3D interval invariance, generic configuration (reported only)",
        True,
        _wrap(sampling.float_config_3d),
        _wrap(sampling.exact_config_3d),
        _invariance_3d_f,
        _invariance_3d_e,
        asserted=False,
    ),
    Check(
        "collapse_3d_general",
        "generalized_boost_3d == standard vector boost, generic configuration (reported only)",
        True,
        _wrap(sampling.float_config_3d),
        _wrap(sampling.exact_config_3d),
        _collapse_3d_f,
        _collapse_3d_e,
        asserted=False,
    ),
]

CHECKS_BY_NAME = {c.name: c for c in CHECKS}
VERIFY_CHECKS = [c.name for c in CHECKS]
SWEEP_CHECKS = ["invariance_1d", "invariance_3d_collinear", "invariance_3d_general"]


# running


def _evaluate(check: Check, sample: dict, point: GridPoint | None, grid, mode: str):
    fn = check.eval_exact if mode == "exact" else check.eval_float
    if check.name == "group_law":
        return fn(sample, point, grid)
    return fn(sample, point)


@dataclass
class _Outcome:
    phi_index: int
    sample_index: int
    point: GridPoint | None
    sample: dict
    outputs: dict | None = None
    residual: object = None
    magnitude: object = None
    error: str | None = None


def _run_one(check, phi_index, sample_index, point, sample, grid, mode) -> _Outcome:
    out = _Outcome(phi_index, sample_index, point, sample)
    try:
        out.outputs, out.residual = _evaluate(check, sample, point, grid, mode)
    except (RelkinError, ZeroDivisionError) as exc:
        out.error = f"{type(exc).__name__}: {exc}"
        return out
    out.magnitude = magnitude(out.residual, mode)
    return out


def _format_record(o: _Outcome, grid, mode: str) -> dict:
    inputs = {}
    if o.point is not None:
        tan = o.point.tan if mode == "exact" else o.point.rot.tan_half
        inputs["tan_half"] = fmt(tan, mode)
    for key, value in o.sample.items():
        if key in ("b_index", "axis_index"):
            continue
        if key in ("X", "V", "n"):
            for c, v in zip("xyz", value):
                inputs[f"{key}_{c}"] = fmt(v, mode)
        else:
            inputs[key] = fmt(value, mode)
    if "b_index" in o.sample:
        b = grid[o.sample["b_index"]]
        inputs["b_tan_half"] = fmt(b.tan if mode == "exact" else b.rot.tan_half, mode)
    phi = None
    if o.point is not None:
        phi = fmt(o.point.rot.phi if mode == "float" else _exact_phi(o.point), "float")
    rec = {
        "phi_index": o.phi_index,
        "sample_index": o.sample_index,
        "phi": phi,
        "inputs": inputs,
        "outputs": {},
        "residual_re": None,
        "residual_im": None,
        "abs_residual": None,
        "error": o.error,
    }
    if o.error is None:
        rec["outputs"] = {k: _as_pair(v, mode) for k, v in o.outputs.items()}
        re, im = _parts(o.residual)
        if mode == "exact":
            rec["residual_re"], rec["residual_im"] = oracle.fraction_str(re), oracle.fraction_str(im)
        else:
            rec["residual_re"], rec["residual_im"] = fmt(re, mode), fmt(im, mode)
        rec["abs_residual"] = fmt(o.magnitude, mode)
    return rec


def _exact_phi(point: GridPoint) -> float:
    if point.tan is oracle.INF:
        return math.pi
    return 2.0 * math.atan(float(point.tan)) % (2.0 * math.pi)


def _as_pair(value, mode):
    out = fmt(value, mode)
    if isinstance(out, list):
        return out
    zero = "0/1" if mode == "exact" else "0"
    return [out, zero]


def run_check(
    name: str,
    config: SweepConfig,
    grid: list[GridPoint] | None = None,
    keep_records: bool = True,
) -> dict:
    """Run one named check and return its report section.

    Without ``keep_records`` only the summary is formatted, which is much
    cheaper; the summary always carries the worst record in full.
    """
    check = CHECKS_BY_NAME[name]
    grid = grid if grid is not None else sampling.phi_grid(config.phi_count)
    rng = sampling.check_rng(config.seed, name)
    mode = config.mode
    sampler = check.sample_exact if mode == "exact" else check.sample_float
    if check.uses_phi:
        n_samples, rows = config.sample_count, list(grid)
    else:
        n_samples, rows = config.sample_count * len(grid), [None]
    samples = [sampler(rng, grid) for _ in range(n_samples)]

    def evaluate_row(item):
        phi_index, point = item
        return [
            _run_one(check, phi_index, i, point, sample, grid, mode)
            for i, sample in enumerate(samples)
        ]

    items = list(enumerate(rows))
    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            row_results = list(pool.map(evaluate_row, items))
    else:
        row_results = [evaluate_row(item) for item in items]
    outcomes = [o for row in row_results for o in row]

    worst = first_error = None
    errors = 0
    for o in outcomes:
        if o.error is not None:
            errors += 1
            first_error = first_error or o
        elif worst is None or o.magnitude > worst.magnitude:
            worst = o

    if mode == "exact":
        passed = errors == 0 and worst is not None and worst.magnitude == 0
    else:
        passed = errors == 0 and worst is not None and worst.magnitude < config.tolerance
    section = {
        "name": name,
        "identity": check.identity,
        "asserted": check.asserted,
        "summary": {
            "record_count": len(outcomes),
            "error_count": errors,
            "max_abs_residual": fmt(worst.magnitude, mode) if worst else None,
            "argmax": {"phi_index": worst.phi_index, "sample_index": worst.sample_index}
            if worst
            else None,
            "tolerance": fmt(config.tolerance, "float") if mode == "float" else "0/1",
            "passed": passed,
            "worst_record": _format_record(worst, grid, mode) if worst else None,
            "first_error": _format_record(first_error, grid, mode) if first_error else None,
        },
    }
    if keep_records:
        section["records"] = [_format_record(o, grid, mode) for o in outcomes]
    return section


def run_report(
    command: str, config: SweepConfig, names: list[str], keep_records: bool = True
) -> dict:
    grid = sampling.phi_grid(config.phi_count)
    checks = [run_check(name, config, grid, keep_records) for name in names]
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "config": {
            **asdict(config),
            "tolerance": fmt(config.tolerance, "float"),
            "phi_grid_size": len(grid),
        },
        "checks": checks,
        "passed": all(c["summary"]["passed"] for c in checks if c["asserted"]),
    }


def verify(config: SweepConfig, keep_records: bool = False) -> dict:
    return run_report("verify", config, VERIFY_CHECKS, keep_records)


def sweep(config: SweepConfig, names: list[str] | None = None) -> dict:
    return run_report("sweep", config, names or SWEEP_CHECKS)


def summary_only(report: dict) -> dict:
    """Copy of ``report`` with the per-record data dropped."""
    return {
        **report,
        "checks": [{k: v for k, v in c.items() if k != "records"} for c in report["checks"]],
    }


# serialization


def load_schema() -> dict:
    """JSON Schema for both report and single-operation output."""
    text = resources.files(__package__).joinpath("report_schema.json").read_text("utf-8")
    return json.loads(text)


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def records_to_csv(report: dict) -> str:
    """One row per record; columns: check, indices, phi, inputs, outputs, residual."""
    input_cols: list[str] = []
    output_cols: list[str] = []
    for check in report["checks"]:
        for rec in check.get("records", []):
            for k in rec["inputs"]:
                if k not in input_cols:
                    input_cols.append(k)
            for k in rec["outputs"]:
                if k not in output_cols:
                    output_cols.append(k)
    header = (
        ["check", "phi_index", "sample_index", "phi"]
        + input_cols
        + [f"{k}_re" for k in output_cols]
        + [f"{k}_im" for k in output_cols]
        + ["residual_re", "residual_im", "abs_residual", "error"]
    )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for check in report["checks"]:
        for rec in check.get("records", []):
            outs = rec["outputs"]
            writer.writerow(
                [check["name"], rec["phi_index"], rec["sample_index"], rec["phi"] or ""]
                + [rec["inputs"].get(k, "") for k in input_cols]
                + [outs[k][0] if k in outs else "" for k in output_cols]
                + [outs[k][1] if k in outs else "" for k in output_cols]
                + [rec["residual_re"] or "", rec["residual_im"] or "", rec["abs_residual"] or ""]
                + [rec["error"] or ""]
            )
    return buf.getvalue()


def summary_to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["check", "asserted", "record_count", "error_count", "max_abs_residual",
         "argmax_phi_index", "argmax_sample_index", "tolerance", "passed"]
    )
    for check in report["checks"]:
        s = check["summary"]
        arg = s["argmax"] or {}
        writer.writerow(
            [check["name"], check["asserted"], s["record_count"], s["error_count"],
             s["max_abs_residual"] or "", arg.get("phi_index", ""), arg.get("sample_index", ""),
             s["tolerance"], s["passed"]]
        )
    return buf.getvalue()
