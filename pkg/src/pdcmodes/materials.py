"""Material data: Sellmeier dispersion per optical axis and the d-matrix.

Materials are loaded from plain-text key/value files (see ``data/ktp.mat``
for the documented schema) so new chi(2) materials can be added without
touching code.  A loaded :class:`MaterialModel` is immutable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from .errors import MaterialFileError, OutOfValidityRange

AXES = ("x", "y", "z")

# Environment variable pointing at an extra directory of material files.
MATERIAL_DIR_ENV = "PDCMODES_MATERIALS"


@dataclass(frozen=True)
class SellmeierAxis:
    """Dispersion along one optical axis.

    n(lam)^2 = A + sum_i B_i / (lam^2 - C_i), lam in micrometers, plus a
    linear thermo-optic correction dn/dT given by a cubic polynomial in
    1/lam (in units of 1e-5 / degC) referenced to ``t_ref`` degC.
    """

    A: float
    resonances: tuple[tuple[float, float], ...]
    thermo: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    t_ref: float = 20.0

    def _n2_terms(self, lam):
        lam2 = np.asarray(lam, dtype=float) ** 2
        n2 = self.A + sum(B / (lam2 - C) for B, C in self.resonances)
        return n2

    def _dndT(self, lam):
        a3, a2, a1, a0 = self.thermo
        return (a3 / lam**3 + a2 / lam**2 + a1 / lam + a0) * 1e-5

    def index(self, lam, T):
        """Refractive index at wavelength ``lam`` (um), temperature ``T`` (degC)."""
        return np.sqrt(self._n2_terms(lam)) + self._dndT(lam) * (T - self.t_ref)

    def d_index(self, lam, T):
        """dn/dlam, closed form."""
        lam = np.asarray(lam, dtype=float)
        lam2 = lam**2
        n0 = np.sqrt(self._n2_terms(lam))
        dn2 = sum(-2.0 * B * lam / (lam2 - C) ** 2 for B, C in self.resonances)
        a3, a2, a1, _ = self.thermo
        dpoly = (-3 * a3 / lam**4 - 2 * a2 / lam**3 - a1 / lam2) * 1e-5
        return dn2 / (2.0 * n0) + dpoly * (T - self.t_ref)

    def d2_index(self, lam, T):
        """d^2 n / dlam^2, closed form."""
        lam = np.asarray(lam, dtype=float)
        lam2 = lam**2
        n0 = np.sqrt(self._n2_terms(lam))
        dn2 = sum(-2.0 * B * lam / (lam2 - C) ** 2 for B, C in self.resonances)
        d2n2 = sum(2.0 * B * (3 * lam2 + C) / (lam2 - C) ** 3 for B, C in self.resonances)
        dn0 = dn2 / (2.0 * n0)
        d2n0 = (d2n2 - 2.0 * dn0**2) / (2.0 * n0)
        a3, a2, a1, _ = self.thermo
        d2poly = (12 * a3 / lam**5 + 6 * a2 / lam**4 + 2 * a1 / lam**3) * 1e-5
        return d2n0 + d2poly * (T - self.t_ref)


@dataclass(frozen=True)
class MaterialModel:
    """Immutable bundle of per-axis dispersion data and the d-matrix."""

    name: str
    sellmeier: dict[str, SellmeierAxis]
    d_matrix: np.ndarray  # 3x6, pm/V, rows ordered x, y, z
    valid_wavelength_um: tuple[float, float]
    valid_temperature_C: tuple[float, float]
    source_citation: str = ""

    def axis(self, axis: str) -> SellmeierAxis:
        if axis not in self.sellmeier:
            raise KeyError(f"unknown optical axis {axis!r}")
        return self.sellmeier[axis]

    def check_range(self, lam, T) -> None:
        lo, hi = self.valid_wavelength_um
        tlo, thi = self.valid_temperature_C
        lam = np.asarray(lam, dtype=float)
        if np.any(lam < lo) or np.any(lam > hi):
            raise OutOfValidityRange(
                f"wavelength outside [{lo}, {hi}] um for material {self.name}"
            )
        if T < tlo or T > thi:
            raise OutOfValidityRange(
                f"temperature {T} degC outside [{tlo}, {thi}] for material {self.name}"
            )


# Kleinman contracted-index map: (axis_a, axis_b) -> column of d_il (0-based)
_CONTRACTED = {
    ("x", "x"): 0,
    ("y", "y"): 1,
    ("z", "z"): 2,
    ("y", "z"): 3,
    ("z", "y"): 3,
    ("x", "z"): 4,
    ("z", "x"): 4,
    ("x", "y"): 5,
    ("y", "x"): 5,
}


@dataclass(frozen=True)
class PolarizationTriple:
    """Pump, signal and idler polarization axes."""

    pump_axis: str = "y"
    signal_axis: str = "z"
    idler_axis: str = "y"

    def __post_init__(self):
        for a in (self.pump_axis, self.signal_axis, self.idler_axis):
            if a not in AXES:
                raise ValueError(f"invalid axis label {a!r}")

    @property
    def pdc_type(self) -> str:
        if self.signal_axis != self.idler_axis:
            return "typeII"
        if self.signal_axis == self.pump_axis:
            return "type0"
        return "typeI"


def effective_nonlinearity(material: MaterialModel, pol: PolarizationTriple):
    """d_il entry (pm/V) for a polarization triple and whether it is allowed.

    Zero entries of the d-matrix mark forbidden processes.
    """
    row = AXES.index(pol.pump_axis)
    col = _CONTRACTED[(pol.signal_axis, pol.idler_axis)]
    d = float(material.d_matrix[row, col])
    return d, d != 0.0


_REQUIRED_KEYS = (
    "name",
    "citation",
    "valid_wavelength_um",
    "valid_temperature_C",
    "sellmeier_x",
    "sellmeier_y",
    "sellmeier_z",
    "d_row_x",
    "d_row_y",
    "d_row_z",
)


def _parse_material_text(text: str, origin: str) -> MaterialModel:
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise MaterialFileError(f"{origin}:{lineno}: expected 'key = values'")
        key, val = line.split("=", 1)
        entries[key.strip()] = val.strip()

    missing = [k for k in _REQUIRED_KEYS if k not in entries]
    if missing:
        raise MaterialFileError(f"{origin}: missing required keys: {', '.join(missing)}")

    def floats(key):
        try:
            return [float(tok) for tok in entries[key].split()]
        except ValueError as exc:
            raise MaterialFileError(f"{origin}: bad numeric value in {key!r}") from exc

    t_ref = float(entries.get("thermo_optic_reference_C", "20"))
    axes = {}
    for ax in AXES:
        sell = floats(f"sellmeier_{ax}")
        if len(sell) < 3 or len(sell) % 2 == 0:
            raise MaterialFileError(
                f"{origin}: sellmeier_{ax} must be 'A B1 C1 [B2 C2 ...]'"
            )
        A, rest = sell[0], sell[1:]
        res = tuple((rest[i], rest[i + 1]) for i in range(0, len(rest), 2))
        thermo_key = f"thermo_optic_{ax}"
        thermo = (0.0, 0.0, 0.0, 0.0)
        if thermo_key in entries:
            tvals = floats(thermo_key)
            if len(tvals) != 4:
                raise MaterialFileError(f"{origin}: {thermo_key} needs 4 coefficients")
            thermo = tuple(tvals)
        axes[ax] = SellmeierAxis(A=A, resonances=res, thermo=thermo, t_ref=t_ref)

    rows = [floats(f"d_row_{ax}") for ax in AXES]
    if any(len(r) != 6 for r in rows):
        raise MaterialFileError(f"{origin}: d-matrix rows must have 6 entries")
    d = np.array(rows, dtype=float)
    d.setflags(write=False)

    wl = floats("valid_wavelength_um")
    tc = floats("valid_temperature_C")
    if len(wl) != 2 or len(tc) != 2:
        raise MaterialFileError(f"{origin}: validity ranges need exactly two numbers")

    return MaterialModel(
        name=entries["name"],
        sellmeier=axes,
        d_matrix=d,
        valid_wavelength_um=(wl[0], wl[1]),
        valid_temperature_C=(tc[0], tc[1]),
        source_citation=entries["citation"],
    )


def load_material(name_or_path: str) -> MaterialModel:
    """Load a material by short name (bundled or in $PDCMODES_MATERIALS) or path."""
    if os.path.sep in name_or_path or name_or_path.endswith(".mat"):
        path = name_or_path
        if not os.path.exists(path):
            raise MaterialFileError(f"material file not found: {path}")
        with open(path, encoding="utf-8") as fh:
            return _parse_material_text(fh.read(), path)

    override = os.environ.get(MATERIAL_DIR_ENV)
    if override:
        cand = os.path.join(override, name_or_path.lower() + ".mat")
        if os.path.exists(cand):
            with open(cand, encoding="utf-8") as fh:
                return _parse_material_text(fh.read(), cand)

    ref = resources.files("pdcmodes.data").joinpath(name_or_path.lower() + ".mat")
    try:
        text = ref.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise MaterialFileError(f"no bundled material named {name_or_path!r}") from exc
    return _parse_material_text(text, f"bundled:{name_or_path.lower()}.mat")
