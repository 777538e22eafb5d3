"""Sweep configuration, execution, determinism, and the K(L) minimizer."""

import json

import numpy as np
import pytest

from pdcmodes import (
    ConfigError,
    NoInteriorMinimum,
    SweepConfig,
    find_k_minimum,
    run_sweep,
)

FAST = dict(grid_points=101)  # coarse grid keeps unit tests quick


def _cfg(**kw):
    doc = dict(FAST)
    doc.update(kw)
    return SweepConfig.from_dict(doc)


def test_config_validation():
    with pytest.raises(ConfigError):
        SweepConfig.from_dict([])  # not an object
    with pytest.raises(ConfigError):
        _cfg(swept=[], observables=["K"])  # needs 1-2 swept variables
    with pytest.raises(ConfigError):
        _cfg(swept=[{"variable": "nope", "min": 1, "max": 2, "steps": 2}])
    with pytest.raises(ConfigError):
        _cfg(swept=[{"variable": "pump_width_nm", "min": 0.1, "max": 2, "steps": 2}])
    with pytest.raises(ConfigError):
        _cfg(
            swept=[{"variable": "pump_width_nm", "min": 2, "max": 4, "steps": 2}],
            observables=["bogus"],
        )
    with pytest.raises(ConfigError):
        _cfg(
            swept=[{"variable": "pump_width_nm", "min": 2, "max": 4, "steps": 2}],
            typo_key=1,
        )
    with pytest.raises(ConfigError):
        _cfg(swept=[{"variable": "pump_width_nm", "min": 2, "max": 4}])  # no steps


def test_config_json_roundtrip(tmp_path):
    cfg = _cfg(
        swept=[{"variable": "pump_width_nm", "min": 2, "max": 4, "steps": 3}],
        observables=["K", "overlap_0"],
    )
    p = tmp_path / "cfg.json"
    p.write_text(json.dumps(cfg.to_dict()), encoding="utf-8")
    assert SweepConfig.from_json(p) == cfg
    with pytest.raises(ConfigError):
        SweepConfig.from_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        SweepConfig.from_json(bad)


def test_basic_sweep_rows_and_columns():
    cfg = _cfg(
        swept=[{"variable": "pump_width_nm", "min": 2, "max": 6, "steps": 3}],
        observables=["K", "retained_mode_count", "overlap_0", "lambda_k"],
    )
    result = run_sweep(cfg)
    assert [r["pump_width_nm"] for r in result.rows] == [2.0, 4.0, 6.0]
    assert result.columns[:3] == ["K", "retained_mode_count", "overlap_0"]
    assert "lambda_k0" in result.columns and "lambda_k7" in result.columns
    for row in result.rows:
        assert "error" not in row
        assert row["K"] >= 1.0
        assert 0.0 <= row["overlap_0"] <= 1.0
    # more pump bandwidth, more modes
    assert result.rows[0]["K"] < result.rows[-1]["K"]


def test_coupled_square_dimensions():
    cfg = _cfg(
        swept=[{"variable": "waveguide_wh_um", "min": 6, "max": 9, "steps": 2}],
        observables=["lambda_sgvm"],
    )
    rows = run_sweep(cfg).rows
    # tighter confinement pushes the matching wavelength down
    assert rows[0]["lambda_sgvm"] < rows[1]["lambda_sgvm"]
    assert rows[1]["lambda_sgvm"] == pytest.approx(1547.99, abs=0.1)


def test_two_variable_sweep_order():
    cfg = _cfg(
        swept=[
            {"variable": "pump_width_nm", "min": 2, "max": 4, "steps": 2},
            {"variable": "waveguide_length_mm", "min": 5, "max": 10, "steps": 2},
        ],
        observables=["K"],
    )
    rows = run_sweep(cfg).rows
    got = [(r["pump_width_nm"], r["waveguide_length_mm"]) for r in rows]
    assert got == [(2.0, 5.0), (2.0, 10.0), (4.0, 5.0), (4.0, 10.0)]


def test_per_point_errors_are_tagged():
    cfg = _cfg(
        grid_points=63,  # triggers a physics error at every point
        swept=[{"variable": "pump_width_nm", "min": 2, "max": 4, "steps": 2}],
        observables=["K"],
    )
    rows = run_sweep(cfg).rows
    assert all(r["error"].startswith("GridTooCoarse") for r in rows)


def test_csv_json_outputs(tmp_path):
    cfg = _cfg(
        swept=[{"variable": "pump_width_nm", "min": 2, "max": 4, "steps": 2}],
        observables=["K"],
    )
    result = run_sweep(cfg)
    cp, jp = tmp_path / "out.csv", tmp_path / "out.json"
    result.write_csv(cp)
    result.write_json(jp)
    lines = cp.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "pump_width_nm,K,error"
    assert len(lines) == 3
    doc = json.loads(jp.read_text(encoding="utf-8"))
    assert doc["config"]["grid_points"] == 101
    assert "material_citation" in doc["provenance"]
    assert len(doc["rows"]) == 2


def test_worker_count_does_not_change_bytes(tmp_path):
    cfg = _cfg(
        swept=[{"variable": "pump_width_nm", "min": 1, "max": 12, "steps": 6}],
        observables=["K", "overlap_0"],
    )
    paths = []
    for i, workers in enumerate((1, 4)):
        p = tmp_path / f"run{i}.csv"
        run_sweep(cfg, workers=workers).write_csv(p)
        paths.append(p.read_bytes())
    assert paths[0] == paths[1]


def test_find_k_minimum_interior():
    cfg = SweepConfig(grid_points=201)
    L, K = find_k_minimum(cfg, pump_width_nm=1.1, length_bracket_mm=(4.0, 16.0))
    assert 4.0 < L < 16.0
    assert K >= 1.0
    # the located point beats both bracket endpoints
    import dataclasses

    from pdcmodes.materials import load_material
    from pdcmodes.sweep import _evaluate_point

    mat = load_material(cfg.material)
    base = dataclasses.replace(cfg, pump_width_nm=1.1, observables=("K",))
    for edge in (4.0, 16.0):
        point = dataclasses.replace(base, waveguide_length_mm=edge)
        assert K < _evaluate_point(point, mat)["K"]


def test_find_k_minimum_monotone_raises():
    cfg = SweepConfig(grid_points=201)
    with pytest.raises(NoInteriorMinimum):
        find_k_minimum(cfg, pump_width_nm=2.0, length_bracket_mm=(5.0, 15.0))
