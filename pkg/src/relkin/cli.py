"""Command-line interface.

Usage:
    relkin compose --u 0.6 --v 0.8
    relkin boost --x 4 --t 5 --beta 0.6
    relkin rotate --beta 0.5 --phi pi
    relkin gboost --x 4 --t 5 --beta 0.6 --phi pi/2
    relkin gboost --vec 1.8,2.4,0 --t 5 --vel 0.36,0.48,0 --axis 1,0,0 --phi pi/2
    relkin verify --mode exact --phi-grid 8 --samples 10
    relkin sweep --seed 42 --format csv --out sweep.csv

Exit codes: 0 when every asserted check passes, 1 when a residual exceeds
the tolerance, 2 on usage or precondition errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from fractions import Fraction

from . import boost1d, kin3d, oracle, reciprocity, scalar, sweep
from .errors import RelkinError
from .kin3d import ReciprocityAxis, Vec3
from .reciprocity import ReciprocityRotation

RESULT_SCHEMA_VERSION = "relkin.result/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_PI_RE = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*(?P<coef>\d+(?:\.\d*)?|\.\d+|\d+/\d+)?\s*\*?\s*pi\s*(?:/\s*(?P<div>\d+))?\s*$",
    re.IGNORECASE,
)


class UsageError(Exception):
    pass


# argument parsing helpers


def parse_angle(text: str) -> Fraction | float:
    """``pi``-expressions become an exact multiple of pi (a Fraction); anything
    else is a float in radians."""
    m = _PI_RE.match(text)
    if m:
        coef = Fraction(m["coef"]) if m["coef"] else Fraction(1)
        if m["div"]:
            if int(m["div"]) == 0:
                raise UsageError(f"division by zero in angle {text!r}")
            coef /= int(m["div"])
        return -coef if m["sign"] == "-" else coef
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"cannot parse angle {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"angle must be finite, got {text!r}")
    return value


def parse_number(text: str, mode: str):
    try:
        if mode == "exact":
            return Fraction(text.strip())
        value = float(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse number {text!r}") from None
    if not math.isfinite(value):
        raise UsageError(f"number must be finite, got {text!r}")
    return value


def parse_vector(text: str, mode: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated components, got {text!r}")
    return tuple(parse_number(p, mode) for p in parts)


def _exact_tan_for_pi_fraction(frac: Fraction):
    half = (frac / 2) % 1
    table = {Fraction(0): Fraction(0), Fraction(1, 4): Fraction(1),
             Fraction(1, 2): oracle.INF, Fraction(3, 4): Fraction(-1)}
    if half not in table:
        raise UsageError("exact mode needs a multiple of pi/2 or a rational --r")
    return table[half]


def rotation_from_args(args, mode: str):
    """Float ReciprocityRotation, or an exact tangent in exact mode."""
    given = [a for a in ("phi", "phi_deg", "r") if getattr(args, a) is not None]
    if len(given) > 1:
        raise UsageError("give only one of --phi, --phi-deg, --r")
    if not given:
        raise UsageError("a rotation is required: --phi, --phi-deg or --r")
    if args.r is not None:
        try:
            tan = oracle.as_tan(args.r)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse tangent {args.r!r}") from None
        if mode == "exact":
            return tan
        if tan is oracle.INF:
            return ReciprocityRotation.from_tan(math.inf)
        return ReciprocityRotation.from_pair(float(tan), 1.0)
    if args.phi_deg is not None:
        try:
            angle = Fraction(args.phi_deg) / 180
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse angle {args.phi_deg!r}") from None
    else:
        angle = parse_angle(args.phi)
    if mode == "exact":
        if isinstance(angle, float):
            if angle != 0:
                raise UsageError("exact mode needs a multiple of pi/2 or a rational --r")
            angle = Fraction(0)
        return _exact_tan_for_pi_fraction(angle)
    if isinstance(angle, Fraction):
        return ReciprocityRotation.from_pi_fraction(angle)
    return ReciprocityRotation.from_angle(angle)


def _require(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def _mode(args) -> str:
    return "exact" if args.exact else args.mode


def _scale(args, mode):
    if args.c is None:
        return 1
    c = parse_number(args.c, mode)
    if c <= 0:
        raise UsageError("--c must be positive")
    return c


# operations


def cmd_compose(args) -> dict:
    _require(args, "u", "v")
    mode = _mode(args)
    c = _scale(args, mode)
    u, v = parse_number(args.u, mode), parse_number(args.v, mode)
    impl = oracle if mode == "exact" else scalar
    value = impl.compose(u / c, v / c, args.sign) * c
    return _result("compose", mode, {"u": u, "v": v, "sign": args.sign}, {"result": value})


def cmd_boost(args) -> dict:
    _require(args, "x", "t", "beta")
    mode = _mode(args)
    c = _scale(args, mode)
    x, t, beta = (parse_number(getattr(args, n), mode) for n in ("x", "t", "beta"))
    if mode == "exact":
        x_out, t_out = oracle.boost_event(x / c, t, beta / c)
    else:
        x_out, t_out = scalar.boost_event(scalar.Event1D(x / c, t), beta / c)
    return _result(
        "boost", mode, {"x": x, "t": t, "beta": beta}, {"x_out": x_out * c, "t_out": t_out}
    )


def cmd_rotate(args) -> dict:
    mode = _mode(args)
    c = _scale(args, mode)
    rot = rotation_from_args(args, mode)
    inputs = {"rotation": _rotation_label(rot, mode)}
    if args.vec is not None:
        _require(args, "axis")
        vec = parse_vector(args.vec, mode)
        n = parse_vector(args.axis, mode)
        inputs.update(vec=vec, axis=n)
        scaled = tuple(x / c for x in vec)
        if args.t is not None:
            t = parse_number(args.t, mode)
            inputs["t"] = t
            if mode == "exact":
                out = oracle.rotate_position_3d(scaled, t, n, rot)
            else:
                out = kin3d.rotate_position_3d(Vec3(*scaled), t, ReciprocityAxis(Vec3(*n), rot))
        elif mode == "exact":
            out = oracle.rotate_velocity_3d(scaled, n, rot)
        else:
            out = kin3d.rotate_velocity_3d(Vec3(*scaled), ReciprocityAxis(Vec3(*n), rot))
        outputs = {f"result_{k}": v * c for k, v in zip("xyz", out)}
        return _result("rotate", mode, inputs, outputs)
    if args.beta is not None:
        beta = parse_number(args.beta, mode)
        inputs["beta"] = beta
        if mode == "exact":
            value = oracle.rotate_velocity(beta / c, rot)
        else:
            value = reciprocity.rotate_velocity(beta / c, rot)
        return _result("rotate", mode, inputs, {"result": value * c})
    _require(args, "x", "t")
    x, t = parse_number(args.x, mode), parse_number(args.t, mode)
    inputs.update(x=x, t=t)
    if mode == "exact":
        value = oracle.rotate_coordinate(x / c, t, rot)
    else:
        value = reciprocity.rotate_coordinate(scalar.Event1D(x / c, t), rot)
    return _result("rotate", mode, inputs, {"result": value * c})


def cmd_gboost(args) -> dict:
    mode = _mode(args)
    c = _scale(args, mode)
    rot = rotation_from_args(args, mode)
    inputs = {"rotation": _rotation_label(rot, mode)}
    if args.vec is not None:
        _require(args, "t", "vel", "axis")
        X, V, n = (parse_vector(getattr(args, k), mode) for k in ("vec", "vel", "axis"))
        t = parse_number(args.t, mode)
        inputs.update(vec=X, t=t, vel=V, axis=n)
        Xs, Vs = tuple(x / c for x in X), tuple(v / c for v in V)
        if mode == "exact":
            X_out, t_out = oracle.generalized_boost_3d(Xs, t, Vs, n, rot)
            residual = oracle.invariance_residual_3d(Xs, t, Vs, n, rot)
        else:
            axis = ReciprocityAxis(Vec3(*n), rot)
            X_out, t_out = kin3d.generalized_boost_3d(Vec3(*Xs), t, Vec3(*Vs), axis)
            residual = kin3d.invariance_residual_3d(Vec3(*Xs), t, Vec3(*Vs), axis)
        outputs = {f"X_out_{k}": v * c for k, v in zip("xyz", X_out)}
        outputs.update(t_out=t_out, invariance_residual=residual)
        return _result("gboost", mode, inputs, outputs)
    _require(args, "x", "t", "beta")
    x, t, beta = (parse_number(getattr(args, n), mode) for n in ("x", "t", "beta"))
    inputs.update(x=x, t=t, beta=beta)
    if mode == "exact":
        x_out, t_out = oracle.generalized_boost(x / c, t, beta / c, rot)
        residual = oracle.invariance_residual_1d(x / c, t, beta / c, rot)
    else:
        e = scalar.Event1D(x / c, t)
        x_out, t_out = boost1d.generalized_boost(e, beta / c, rot)
        residual = boost1d.invariance_residual_1d(e, beta / c, rot)
    outputs = {"x_out": x_out * c, "t_out": t_out, "invariance_residual": residual}
    return _result("gboost", mode, inputs, outputs)


def _rotation_label(rot, mode: str) -> str:
    if mode == "exact":
        return "tan_half=" + sweep.fmt(rot, "exact")
    return f"phi={rot.phi:.17g}"


def _fmt_value(value, mode: str):
    if isinstance(value, tuple):
        return [_fmt_value(v, mode) for v in value]
    if isinstance(value, str):
        return value
    return sweep.fmt(value, mode)


def _result(command: str, mode: str, inputs: dict, outputs: dict) -> dict:
    out = {
        "schema": RESULT_SCHEMA_VERSION,
        "command": command,
        "mode": mode,
        "inputs": {k: _fmt_value(v, mode) for k, v in inputs.items()},
        "result": {k: _fmt_value(v, mode) for k, v in outputs.items()},
    }
    if mode == "exact":
        out["approx"] = {k: _fmt_value(_approx(v), "float") for k, v in outputs.items()}
    return out


def _approx(value):
    if isinstance(value, oracle.ComplexRational):
        return complex(value)
    return float(value)


def result_to_csv(result: dict) -> str:
    row = {}
    for k, v in result["inputs"].items():
        if isinstance(v, list):
            for axis, comp in zip("xyz", v):
                row[f"{k}_{axis}"] = comp
        else:
            row[k] = v
    outputs = result["result"]
    for part, idx in (("re", 0), ("im", 1)):
        for k, v in outputs.items():
            if isinstance(v, list):
                row[f"{k}_{part}"] = v[idx]
            elif part == "re":
                row[k] = v
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(row))
    writer.writerow(list(row.values()))
    return buf.getvalue()


# verification and sweeps


def _sweep_config(args) -> sweep.SweepConfig:
    seed = args.seed
    if seed is None:
        env = os.environ.get("RELKIN_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            raise UsageError(f"RELKIN_SEED must be an integer, got {env!r}") from None
    try:
        return sweep.SweepConfig(
            phi_count=args.phi_grid,
            sample_count=args.samples,
            seed=seed,
            tolerance=args.tol,
            mode=_mode(args),
            workers=args.workers,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args):
    config = _sweep_config(args)
    report = sweep.verify(config, keep_records=args.out is not None)
    if args.out is not None:
        _write(args.out, _render_report(report, args.format))
    summary = sweep.summary_only(report)
    text = sweep.summary_to_csv(summary) if args.format == "csv" else sweep.to_json(summary)
    return text, EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_sweep(args):
    config = _sweep_config(args)
    names = None
    if args.checks:
        names = [n.strip() for n in args.checks.split(",") if n.strip()]
        unknown = [n for n in names if n not in sweep.CHECKS_BY_NAME]
        if unknown:
            raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    report = sweep.sweep(config, names)
    return _render_report(report, args.format), EXIT_OK if report["passed"] else EXIT_FAIL


def _render_report(report: dict, fmt: str) -> str:
    return sweep.records_to_csv(report) if fmt == "csv" else sweep.to_json(report)


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=sweep.MODES, default="float")
    p.add_argument("--exact", action="store_true", help="shorthand for --mode exact")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", metavar="PATH", help="write output to PATH")


def _add_rotation(p: argparse.ArgumentParser) -> None:
    p.add_argument("--phi", help="angle in radians, or a pi expression such as pi, pi/2, 3pi/4")
    p.add_argument("--phi-deg", help="angle in degrees")
    p.add_argument("--r", help="half-angle tangent tan(phi/2); 'inf' for phi = pi")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relkin", description="Reciprocity-rotated Lorentz kinematics (units with c = 1)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="relativistic velocity composition")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--sign", choices=("+", "-"), default="+")
    p.add_argument("--c", help="speed of light in the units of the inputs (display scale)")
    _add_common(p)
    p.set_defaults(handler=cmd_compose)

    p = sub.add_parser("boost", help="standard Lorentz boost of an event")
    for name in ("x", "t", "beta"):
        p.add_argument(f"--{name}", required=True)
    p.add_argument("--c", help="speed of light in the units of the inputs (display scale)")
    _add_common(p)
    p.set_defaults(handler=cmd_boost)

    for name, handler, help_text in (
        ("rotate", cmd_rotate, "rotate a velocity or coordinate in reciprocity space"),
        ("gboost", cmd_gboost, "Lorentz transformation in a given reciprocity state"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--beta")
        p.add_argument("--x")
        p.add_argument("--t")
        p.add_argument("--vec", metavar="X,Y,Z", help="3D position (or velocity for rotate without --t)")
        p.add_argument("--axis", metavar="X,Y,Z", help="reciprocity axis direction")
        if name == "gboost":
            p.add_argument("--vel", metavar="X,Y,Z", help="3D boost velocity")
        p.add_argument("--c", help="speed of light in the units of the inputs (display scale)")
        _add_rotation(p)
        _add_common(p)
        p.set_defaults(handler=handler)

    for name, handler, help_text in (
        ("verify", cmd_verify, "run the full invariant suite"),
        ("sweep", cmd_sweep, "invariance residuals over the angle grid"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--phi-grid", type=int, default=64, metavar="N")
        p.add_argument("--samples", type=int, default=100, metavar="N")
        p.add_argument("--seed", type=int, default=None, help="default: $RELKIN_SEED or 0")
        p.add_argument("--tol", "--tolerance", dest="tol", type=float, default=1e-10, metavar="R")
        p.add_argument("--workers", type=int, default=1, metavar="N")
        if name == "sweep":
            p.add_argument("--checks", help="comma-separated check names")
        _add_common(p)
        p.set_defaults(handler=handler)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        outcome = args.handler(args)
    except UsageError as exc:
        print(f"relkin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RelkinError as exc:
        print(f"relkin: precondition violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(outcome, dict):
        text = result_to_csv(outcome) if args.format == "csv" else json.dumps(outcome, indent=2) + "\n"
        code = EXIT_OK
        if args.out is not None:
            _write(args.out, text)
            return code
    else:
        text, code = outcome
        if args.out is not None and args.command == "sweep":
            _write(args.out, text)
            return code
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
