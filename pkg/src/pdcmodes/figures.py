"""Pinned configurations that regenerate each result figure's data as CSV.

Each entry fixes every input the underlying study left implicit (those
choices are documented in the config echoes written next to the CSVs).
Common fixed values: pump central wavelength 775 nm, temperature 20 degC,
length 10 mm and 6x6 um cross-section where the study quoted them, 9x9 um
for the telecom SGVM operating point.
"""

from __future__ import annotations

import os

import numpy as np

from .dispersion import WaveguideGeometry
from .jsa import PumpSpec, build_jsa
from .materials import PolarizationTriple, load_material
from .phasematching import ProcessSpec, mismatch_residual, taylor_coefficients
from .sweep import SweepConfig, run_sweep

_SWEEP_FIGURES: dict[str, dict] = {
    # Schmidt number vs pump width for two square cross-sections, L = 10 mm.
    "k_vs_pump_width": {
        "waveguide_length_mm": 10.0,
        "swept": [
            {"variable": "pump_width_nm", "min": 1.0, "max": 12.0, "steps": 23},
            {"variable": "waveguide_wh_um", "min": 6.0, "max": 9.0, "steps": 2},
        ],
        "observables": ["K", "retained_mode_count"],
    },
    # Schmidt number vs waveguide length at 6x6 um for three pump widths.
    "k_vs_length": {
        "waveguide_w_um": 6.0,
        "waveguide_h_um": 6.0,
        "swept": [
            {"variable": "waveguide_length_mm", "min": 5.0, "max": 30.0, "steps": 26},
            {"variable": "pump_width_nm", "min": 2.0, "max": 6.0, "steps": 3},
        ],
        "observables": ["K"],
    },
    # First-mode FWHM vs pump width, 6x6 um (intentionally off SGVM), L = 10 mm.
    "fwhm_vs_pump_width": {
        "waveguide_w_um": 6.0,
        "waveguide_h_um": 6.0,
        "waveguide_length_mm": 10.0,
        "swept": [{"variable": "pump_width_nm", "min": 1.0, "max": 12.0, "steps": 23}],
        "observables": ["fwhm_signal", "fwhm_idler"],
    },
    # First-mode FWHM vs square cross-section for pump widths 2 and 12 nm.
    "fwhm_vs_dimensions": {
        "waveguide_length_mm": 10.0,
        "swept": [
            {"variable": "waveguide_wh_um", "min": 4.0, "max": 10.0, "steps": 25},
            {"variable": "pump_width_nm", "min": 2.0, "max": 12.0, "steps": 2},
        ],
        "observables": ["fwhm_signal", "fwhm_idler"],
    },
    # First-mode FWHM vs length at 3 nm pump width, 6x6 um.
    "fwhm_vs_length": {
        "waveguide_w_um": 6.0,
        "waveguide_h_um": 6.0,
        "pump_width_nm": 3.0,
        "swept": [
            {"variable": "waveguide_length_mm", "min": 5.0, "max": 30.0, "steps": 26}
        ],
        "observables": ["fwhm_signal", "fwhm_idler"],
    },
    # First six mode overlaps vs pump width at the 9x9 um SGVM point, L = 10 mm.
    "overlap_vs_pump_width": {
        "waveguide_length_mm": 10.0,
        "swept": [{"variable": "pump_width_nm", "min": 1.0, "max": 12.0, "steps": 23}],
        "observables": ["K", "retained_mode_count"]
        + [f"overlap_{n}" for n in range(6)],
    },
    # First six mode overlaps vs length at 3 nm pump width, 9x9 um.
    "overlap_vs_length": {
        "pump_width_nm": 3.0,
        "swept": [
            {"variable": "waveguide_length_mm", "min": 5.0, "max": 30.0, "steps": 26}
        ],
        "observables": ["K"] + [f"overlap_{n}" for n in range(6)],
    },
    # First six mode overlaps vs square cross-section at 2 nm pump width.
    "overlap_vs_dimensions": {
        "pump_width_nm": 2.0,
        "waveguide_length_mm": 10.0,
        "swept": [{"variable": "waveguide_wh_um", "min": 4.0, "max": 10.0, "steps": 25}],
        "observables": [f"overlap_{n}" for n in range(6)],
    },
    # SGVM wavelength vs temperature at 9x9 um.
    "sgvm_vs_temperature": {
        "swept": [{"variable": "temperature_C", "min": 20.0, "max": 250.0, "steps": 24}],
        "observables": ["lambda_sgvm"],
    },
    # SGVM wavelength surface over the width x height plane.
    "sgvm_surface": {
        "swept": [
            {"variable": "waveguide_w_um", "min": 4.0, "max": 10.0, "steps": 13},
            {"variable": "waveguide_h_um", "min": 4.0, "max": 10.0, "steps": 13},
        ],
        "observables": ["lambda_sgvm"],
    },
}


def _run_sweep_figure(name: str, outdir: str, workers: int) -> list[str]:
    cfg = SweepConfig.from_dict(dict(_SWEEP_FIGURES[name]))
    result = run_sweep(cfg, workers=workers)
    csv_path = os.path.join(outdir, f"{name}.csv")
    json_path = os.path.join(outdir, f"{name}.json")
    result.write_csv(csv_path)
    result.write_json(json_path)
    return [csv_path, json_path]


def _taylor_crossing(outdir: str, workers: int) -> list[str]:
    """Group-velocity coefficients vs degenerate wavelength, 6x6 um, 20 degC."""
    material = load_material("ktp")
    geometry = WaveguideGeometry(width_um=6.0, height_um=6.0)
    lams = np.linspace(1.2, 1.9, 141)
    path = os.path.join(outdir, "taylor_crossing.csv")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("lambda_um,gamma_s,minus_gamma_i\n")
        for lam in lams:
            spec = ProcessSpec(
                material=material, geometry=geometry, pump_wavelength_um=lam / 2.0
            )
            tc = taylor_coefficients(spec)
            fh.write(f"{lam:.9e},{tc.gamma_s:.9e},{-tc.gamma_i:.9e}\n")
    return [path]


def _jsa_heatmap(name: str, polarization: PolarizationTriple):
    def runner(outdir: str, workers: int) -> list[str]:
        material = load_material("ktp")
        geometry = WaveguideGeometry(width_um=9.0, height_um=9.0, length_mm=10.0)
        spec = ProcessSpec(
            material=material, geometry=geometry, polarization=polarization
        ).with_poling()
        pump = PumpSpec(width_nm=4.0)
        amp = build_jsa(spec, pump, n_points=301)
        path = os.path.join(outdir, f"{name}.csv")
        amp.to_csv(path)
        return [path]

    return runner


def _mismatch_residual(outdir: str, workers: int) -> list[str]:
    material = load_material("ktp")
    geometry = WaveguideGeometry(width_um=9.0, height_um=9.0, length_mm=10.0)
    spec = ProcessSpec(material=material, geometry=geometry).with_poling()
    res = mismatch_residual(spec, half_span_nm=25.0, n_points=201)
    path = os.path.join(outdir, "mismatch_residual.csv")
    res.to_csv(path)
    return [path]


FIGURES: dict = {name: None for name in _SWEEP_FIGURES}
FIGURES.update(
    {
        "taylor_crossing": _taylor_crossing,
        "jsa_type2": _jsa_heatmap("jsa_type2", PolarizationTriple("y", "z", "y")),
        "jsa_type0": _jsa_heatmap("jsa_type0", PolarizationTriple("z", "z", "z")),
        "mismatch_residual": _mismatch_residual,
    }
)


def figure_names() -> list[str]:
    return sorted(FIGURES)


def run_figure(name: str, outdir: str, workers: int = 1) -> list[str]:
    """Regenerate one named figure's data files; returns the written paths."""
    if name not in FIGURES:
        raise KeyError(f"unknown figure {name!r}; available: {', '.join(figure_names())}")
    os.makedirs(outdir, exist_ok=True)
    runner = FIGURES[name]
    if runner is None:
        return _run_sweep_figure(name, outdir, workers)
    return runner(outdir, workers)
