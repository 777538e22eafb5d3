"""Parameter sweeps over pump and waveguide variables, with CSV/JSON output.

Every sweep point rebuilds the process from scratch (the poling period is
recomputed whenever geometry or temperature changes), builds the JSA,
decomposes it, and evaluates the requested observables.  Points are
independent work items; rows are always assembled in sweep order so output
files are byte-identical regardless of worker count.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .decomposition import schmidt_decompose, schmidt_number
from .dispersion import WaveguideGeometry
from .errors import ConfigError, NoInteriorMinimum, PdcModesError
from .jsa import PumpSpec, build_jsa
from .materials import MaterialModel, PolarizationTriple, load_material
from .modes import ModeProfile, frequency_axis_to_nm, fwhm, overlap
from .phasematching import ProcessSpec, sgvm_wavelength

SWEEP_VARIABLES = (
    "pump_width_nm",
    "waveguide_length_mm",
    "waveguide_w_um",
    "waveguide_h_um",
    "waveguide_wh_um",  # couples width and height (square cross-section)
    "temperature_C",
)

# Documented physical bounds for swept ranges.
VARIABLE_BOUNDS = {
    "pump_width_nm": (1.0, 12.0),
    "waveguide_length_mm": (5.0, 30.0),
    "waveguide_w_um": (4.0, 10.0),
    "waveguide_h_um": (4.0, 10.0),
    "waveguide_wh_um": (4.0, 10.0),
    "temperature_C": (0.0, 300.0),
}

N_LAMBDA_K = 8  # lambda_k list observable exports this many leading coefficients

_SCALAR_OBSERVABLES = (
    "K",
    "retained_mode_count",
    "fwhm_signal",
    "fwhm_idler",
    "lambda_sgvm",
)
_OBSERVABLES = _SCALAR_OBSERVABLES + tuple(f"overlap_{n}" for n in range(6)) + ("lambda_k",)


@dataclass(frozen=True)
class SweptVariable:
    variable: str
    minimum: float
    maximum: float
    steps: int

    def values(self) -> np.ndarray:
        return np.linspace(self.minimum, self.maximum, self.steps)


@dataclass(frozen=True)
class SweepConfig:
    material: str = "ktp"
    pump_wavelength_um: float = 0.775
    pump_width_nm: float = 4.0
    waveguide_w_um: float = 9.0
    waveguide_h_um: float = 9.0
    waveguide_length_mm: float = 10.0
    temperature_C: float = 20.0
    grid_points: int = 401
    truncation: float = 1e-3
    swept: tuple[SweptVariable, ...] = ()
    observables: tuple[str, ...] = ("K",)

    @staticmethod
    def from_dict(doc: dict) -> "SweepConfig":
        if not isinstance(doc, dict):
            raise ConfigError("config document must be a JSON object")
        known = {f.name for f in dataclasses.fields(SweepConfig)}
        unknown = set(doc) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        swept_docs = doc.get("swept", [])
        if not isinstance(swept_docs, list) or not 1 <= len(swept_docs) <= 2:
            raise ConfigError("'swept' must list one or two variables")
        swept = []
        for sd in swept_docs:
            try:
                sv = SweptVariable(
                    variable=sd["variable"],
                    minimum=float(sd["min"]),
                    maximum=float(sd["max"]),
                    steps=int(sd["steps"]),
                )
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError(f"bad swept variable entry: {sd!r}") from exc
            if sv.variable not in SWEEP_VARIABLES:
                raise ConfigError(f"unknown swept variable {sv.variable!r}")
            lo, hi = VARIABLE_BOUNDS[sv.variable]
            if not (lo <= sv.minimum <= sv.maximum <= hi) or sv.steps < 1:
                raise ConfigError(
                    f"range for {sv.variable} must lie inside [{lo}, {hi}] with steps >= 1"
                )
            swept.append(sv)
        observables = tuple(doc.get("observables", ["K"]))
        for ob in observables:
            if ob not in _OBSERVABLES:
                raise ConfigError(f"unknown observable {ob!r}")
        kwargs = {k: v for k, v in doc.items() if k not in ("swept", "observables")}
        return SweepConfig(swept=tuple(swept), observables=observables, **kwargs)

    @staticmethod
    def from_json(path) -> "SweepConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        return SweepConfig.from_dict(doc)

    def to_dict(self) -> dict:
        doc = dataclasses.asdict(self)
        doc["swept"] = [
            {"variable": s.variable, "min": s.minimum, "max": s.maximum, "steps": s.steps}
            for s in self.swept
        ]
        doc["observables"] = list(self.observables)
        return doc


def _apply_point(cfg: SweepConfig, assignment: dict) -> SweepConfig:
    updates: dict = {}
    for var, val in assignment.items():
        if var == "waveguide_wh_um":
            updates["waveguide_w_um"] = val
            updates["waveguide_h_um"] = val
        else:
            updates[var] = val
    return dataclasses.replace(cfg, **updates)


def _evaluate_point(cfg: SweepConfig, material: MaterialModel) -> dict:
    geometry = WaveguideGeometry(
        width_um=cfg.waveguide_w_um,
        height_um=cfg.waveguide_h_um,
        length_mm=cfg.waveguide_length_mm,
    )
    out: dict = {}
    needs_modes = any(
        ob.startswith(("K", "retained", "fwhm", "overlap", "lambda_k"))
        for ob in cfg.observables
    )
    if needs_modes:
        spec = ProcessSpec(
            material=material,
            geometry=geometry,
            temperature_C=cfg.temperature_C,
            pump_wavelength_um=cfg.pump_wavelength_um,
        ).with_poling()
        pump = PumpSpec(wavelength_um=cfg.pump_wavelength_um, width_nm=cfg.pump_width_nm)
        amp = build_jsa(spec, pump, n_points=cfg.grid_points)
        dec = schmidt_decompose(amp, truncation=cfg.truncation, pair_degenerate=True)
        lam_axis_nm = frequency_axis_to_nm(dec.axis)
        for ob in cfg.observables:
            if ob == "K":
                out[ob] = schmidt_number(dec)
            elif ob == "retained_mode_count":
                out[ob] = float(dec.num_retained)
            elif ob == "fwhm_signal":
                out[ob] = fwhm(ModeProfile(lam_axis_nm, dec.signal_modes[:, 0]))
            elif ob == "fwhm_idler":
                out[ob] = fwhm(ModeProfile(lam_axis_nm, dec.idler_modes[:, 0]))
            elif ob.startswith("overlap_"):
                k = int(ob.split("_")[1])
                out[ob] = overlap(
                    ModeProfile(lam_axis_nm, dec.signal_modes[:, k]),
                    ModeProfile(lam_axis_nm, dec.idler_modes[:, k]),
                )
            elif ob == "lambda_k":
                for k in range(N_LAMBDA_K):
                    out[f"lambda_k{k}"] = float(dec.coefficients[k])
    if "lambda_sgvm" in cfg.observables:
        out["lambda_sgvm"] = (
            sgvm_wavelength(material, geometry, cfg.temperature_C) * 1e3
        )  # nm
    return out


def _expand_columns(observables) -> list[str]:
    cols: list[str] = []
    for ob in observables:
        if ob == "lambda_k":
            cols.extend(f"lambda_k{k}" for k in range(N_LAMBDA_K))
        else:
            cols.append(ob)
    return cols


@dataclass
class SweepResult:
    config: dict
    variable_names: list[str]
    columns: list[str]
    rows: list[dict]
    provenance: dict = field(default_factory=dict)

    def write_csv(self, path) -> None:
        """Deterministic CSV: fixed column order, fixed float format."""
        header = self.variable_names + self.columns + ["error"]
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in self.rows:
                cells = []
                for col in header[:-1]:
                    v = row.get(col)
                    cells.append("" if v is None else f"{v:.9e}")
                cells.append(row.get("error", ""))
                fh.write(",".join(cells) + "\n")

    def write_json(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(
                {"config": self.config, "provenance": self.provenance, "rows": self.rows},
                fh,
                indent=2,
                default=float,
            )
            fh.write("\n")


def run_sweep(cfg: SweepConfig, workers: int = 1) -> SweepResult:
    """Evaluate every sweep point; per-point failures are tagged, not fatal."""
    material = load_material(cfg.material)
    names = [s.variable for s in cfg.swept]
    grids = [s.values() for s in cfg.swept]
    points = list(itertools.product(*grids))

    def work(values) -> dict:
        assignment = dict(zip(names, values))
        row = {n: float(v) for n, v in assignment.items()}
        try:
            row.update(_evaluate_point(_apply_point(cfg, assignment), material))
        except PdcModesError as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        return row

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(work, points))
    else:
        rows = [work(p) for p in points]

    return SweepResult(
        config=cfg.to_dict(),
        variable_names=names,
        columns=_expand_columns(cfg.observables),
        rows=rows,
        provenance={
            "material_citation": material.source_citation,
            "code_version": __version__,
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        },
    )


def find_k_minimum(
    cfg: SweepConfig, pump_width_nm: float, length_bracket_mm: tuple[float, float],
    tol_mm: float = 0.05,
):
    """Golden-section search for the interior minimum of K(L).

    Returns (L_at_min_mm, K_min).  Raises NoInteriorMinimum when K is
    monotone over the bracket.
    """
    material = load_material(cfg.material)
    base = dataclasses.replace(cfg, pump_width_nm=pump_width_nm, observables=("K",))

    def k_of(length_mm: float) -> float:
        point = dataclasses.replace(base, waveguide_length_mm=float(length_mm))
        return _evaluate_point(point, material)["K"]

    lo, hi = map(float, length_bracket_mm)
    # coarse scan to confirm the bracket actually contains an interior minimum
    scan = np.linspace(lo, hi, 9)
    k_scan = [k_of(x) for x in scan]
    i_min = int(np.argmin(k_scan))
    if i_min in (0, len(scan) - 1):
        raise NoInteriorMinimum("K is monotone over the bracket")
    a, b = scan[i_min - 1], scan[i_min + 1]
    phi = (np.sqrt(5.0) - 1.0) / 2.0
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = k_of(c), k_of(d)
    while b - a > tol_mm:
        if fc < fd:
            b = d
            d, fd = c, fc
            c = b - phi * (b - a)
            fc = k_of(c)
        else:
            a = c
            c, fc = d, fd
            d = a + phi * (b - a)
            fd = k_of(d)
    if fc < fd:
        return float(c), float(fc)
    return float(d), float(fd)
