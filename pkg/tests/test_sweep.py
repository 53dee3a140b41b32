import csv
import io
import math
from fractions import Fraction

import pytest

from relkin import oracle, sampling, sweep
from relkin.sweep import SweepConfig


def test_phi_grid_contains_special_angles():
    for count in (1, 3, 5, 64):
        grid = sampling.phi_grid(count)
        fracs = [p.pi_fraction for p in grid]
        assert {Fraction(0), Fraction(1, 2), Fraction(1)} <= set(fracs)
        assert fracs == sorted(fracs)
        assert [p.index for p in grid] == list(range(len(grid)))
    assert len(sampling.phi_grid(64)) == 64


def test_phi_grid_exact_tangents():
    grid = {p.pi_fraction: p for p in sampling.phi_grid(8)}
    assert grid[Fraction(0)].tan == 0
    assert grid[Fraction(1, 2)].tan == 1
    assert grid[Fraction(1)].tan is oracle.INF
    assert grid[Fraction(1)].rot.is_pole
    assert grid[Fraction(3, 2)].tan == -1


def test_phi_grid_rejects_empty():
    with pytest.raises(ValueError):
        sampling.phi_grid(0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"phi_count": 0},
        {"sample_count": 0},
        {"seed": -1},
        {"seed": 2**64},
        {"tolerance": -1.0},
        {"tolerance": math.inf},
        {"mode": "fuzzy"},
        {"workers": 0},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SweepConfig(**kwargs)


def test_samplers_respect_preconditions():
    rng = sampling.check_rng(0, "test")
    for _ in range(500):
        b = sampling.float_beta(rng)
        assert 1e-6 <= abs(b) < 0.99
        x, t = sampling.float_event(rng)
        assert abs(x) < t
        cfg = sampling.float_config_3d(rng)
        assert abs(sum(a * b for a, b in zip(cfg["n"], cfg["V"]))) > 0
    for _ in range(100):
        cfg = sampling.exact_config_3d(rng)
        assert oracle.dot(cfg["n"], cfg["n"]) == 1
        assert oracle.dot(cfg["X"], cfg["X"]) < cfg["t"] ** 2


SMALL = SweepConfig(phi_count=6, sample_count=5, seed=3)


def test_records_sorted_and_summary_max():
    section = sweep.run_check("invariance_1d", SMALL)
    recs = section["records"]
    keys = [(r["phi_index"], r["sample_index"]) for r in recs]
    assert keys == sorted(keys)
    true_max = max(float(r["abs_residual"]) for r in recs)
    assert float(section["summary"]["max_abs_residual"]) == true_max
    arg = section["summary"]["argmax"]
    worst = next(r for r in recs if (r["phi_index"], r["sample_index"]) == tuple(arg.values()))
    assert float(worst["abs_residual"]) == true_max


def test_pole_row_present():
    section = sweep.run_check("invariance_1d", SMALL)
    phis = {float(r["phi"]) for r in section["records"]}
    assert math.pi in phis


def test_workers_do_not_change_output():
    one = sweep.to_json(sweep.sweep(SMALL))
    many = sweep.to_json(sweep.sweep(SweepConfig(phi_count=6, sample_count=5, seed=3, workers=4)))
    assert one.replace('"workers": 1', '"workers": 4') == many


def test_seed_changes_samples():
    a = sweep.to_json(sweep.sweep(SMALL))
    b = sweep.to_json(sweep.sweep(SweepConfig(phi_count=6, sample_count=5, seed=4)))
    assert a != b


def test_exact_mode_residuals_are_zero_strings():
    cfg = SweepConfig(phi_count=4, sample_count=3, mode="exact")
    report = sweep.sweep(cfg, ["invariance_1d", "invariance_3d_collinear"])
    for check in report["checks"]:
        assert {r["abs_residual"] for r in check["records"]} == {"0/1"}
    assert report["passed"]


def test_exact_general_residuals_are_nonzero():
    cfg = SweepConfig(phi_count=4, sample_count=20, mode="exact")
    section = sweep.run_check("invariance_3d_general", cfg)
    assert not section["asserted"]
    nonzero = [r for r in section["records"] if r["abs_residual"] != "0/1"]
    assert len(nonzero) >= 20


def test_zero_tolerance_fails_in_float():
    report = sweep.sweep(SweepConfig(phi_count=4, sample_count=5, tolerance=0.0))
    assert not report["passed"]


def test_records_csv_columns():
    text = sweep.records_to_csv(sweep.sweep(SMALL, ["invariance_1d"]))
    header = next(csv.reader(io.StringIO(text)))
    assert header[:4] == ["check", "phi_index", "sample_index", "phi"]
    assert header[-4:] == ["residual_re", "residual_im", "abs_residual", "error"]
    re_cols = [i for i, h in enumerate(header) if h.endswith("_re") and h != "residual_re"]
    im_cols = [i for i, h in enumerate(header) if h.endswith("_im") and h != "residual_im"]
    inputs = [i for i, h in enumerate(header[4:-4], 4) if i not in re_cols + im_cols]
    assert max(inputs) < min(re_cols) and max(re_cols) < min(im_cols)


def test_fmt():
    assert sweep.fmt(0.1, "float") == "0.10000000000000001"
    assert sweep.fmt(Fraction(-3, 4), "exact") == "-3/4"
    assert sweep.fmt(1 + 2j, "float") == ["1", "2"]
    assert sweep.fmt(oracle.INF, "exact") == "inf"
