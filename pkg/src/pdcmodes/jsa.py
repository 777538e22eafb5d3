"""Pump envelope, phasematching function, and the joint spectral amplitude.

The JSA is a real matrix sampled on a square signal x idler angular-frequency
grid centered at degeneracy.  With a real Gaussian pump and a real sinc
phasematching function no complex support is needed.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .dispersion import C_UM_PER_S
from .errors import GridTooCoarse
from .phasematching import ProcessSpec, mismatch, taylor_coefficients


@dataclass(frozen=True)
class FrequencyGrid:
    """Square grid of angular frequencies, identical on both axes.

    ``n_points`` must be odd so the exact degeneracy point is a sample.
    """

    center: float  # rad/s
    half_span: float  # rad/s
    n_points: int

    def __post_init__(self):
        if self.n_points % 2 == 0:
            raise ValueError("n_points must be odd so the center is sampled")
        if self.half_span <= 0:
            raise ValueError("half_span must be positive")

    @property
    def axis(self) -> np.ndarray:
        return self.center + np.linspace(-self.half_span, self.half_span, self.n_points)

    @property
    def domega(self) -> float:
        return 2.0 * self.half_span / (self.n_points - 1)

    @property
    def axis_wavelengths_nm(self) -> np.ndarray:
        return 2.0 * np.pi * C_UM_PER_S / self.axis * 1e3


@dataclass(frozen=True)
class PumpSpec:
    """Gaussian pump envelope.

    ``width_nm`` is the user-facing amplitude 1/e half-width expressed as a
    wavelength bandwidth at the pump central wavelength; internally it is
    converted to an angular-frequency width via
    domega = 2 pi c dlambda / lambda_p0^2.
    """

    wavelength_um: float = 0.775
    width_nm: float = 4.0

    def __post_init__(self):
        if self.width_nm <= 0:
            raise ValueError("pump width must be positive")

    @property
    def omega_0(self) -> float:
        return 2.0 * np.pi * C_UM_PER_S / self.wavelength_um

    @property
    def width_omega(self) -> float:
        return 2.0 * np.pi * C_UM_PER_S * (self.width_nm * 1e-3) / self.wavelength_um**2


def pump_envelope(pump: PumpSpec, omega_sum):
    """Square-normalized Gaussian amplitude at the summed frequency (1/sqrt(rad/s))."""
    wp = pump.width_omega
    x = np.asarray(omega_sum, dtype=float) - pump.omega_0
    out = np.exp(-(x**2) / (2.0 * wp**2)) / np.sqrt(np.sqrt(np.pi) * wp)
    return out[()] if out.ndim == 0 else out


def pm_function(spec: ProcessSpec, omega_s, omega_i):
    """sinc(L dk / 2), dimensionless in [-0.2172, 1]."""
    dk = mismatch(spec, omega_s, omega_i)
    x = 0.5 * spec.geometry.length_um * dk
    return np.sinc(x / np.pi)


def default_grid(spec: ProcessSpec, pump: PumpSpec, n_points: int = 401) -> FrequencyGrid:
    """Grid spanning max(6 pump widths, 1.5x the first phasematching zero)."""
    tc = taylor_coefficients(spec)
    gmax = max(abs(tc.gamma_s - tc.gamma_i), abs(tc.gamma_s), abs(tc.gamma_i))
    first_zero = 4.0 * np.pi / (spec.geometry.length_um * gmax)
    half_span = max(6.0 * pump.width_omega, 1.5 * first_zero)
    return FrequencyGrid(center=spec.omega_p0 / 2.0, half_span=half_span, n_points=n_points)


@dataclass(frozen=True)
class JointSpectralAmplitude:
    grid: FrequencyGrid
    values: np.ndarray  # (n, n), row index = signal, column index = idler
    pump: PumpSpec
    spec: ProcessSpec
    boundary_warning: bool = False

    def to_csv(self, path) -> None:
        """Dense CSV: first row/column carry the axis wavelengths in nm."""
        lam_nm = self.grid.axis_wavelengths_nm
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("lambda_nm," + ",".join(f"{v:.9e}" for v in lam_nm) + "\n")
            for i, ls in enumerate(lam_nm):
                row = ",".join(f"{v:.9e}" for v in self.values[i])
                fh.write(f"{ls:.9e},{row}\n")

    def to_binary(self, path) -> None:
        """Little-endian: two int32 dimensions, then row-major float64 values."""
        with open(path, "wb") as fh:
            fh.write(struct.pack("<ii", *self.values.shape))
            fh.write(self.values.astype("<f8").tobytes(order="C"))


def load_jsa_csv(path):
    """Read back a JSA CSV; returns (lambda_s_nm, lambda_i_nm, values)."""
    raw = np.loadtxt(path, delimiter=",", skiprows=1)
    lam_s = raw[:, 0]
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
    lam_i = np.array([float(v) for v in header[1:]])
    return lam_s, lam_i, raw[:, 1:]


def load_jsa_binary(path) -> np.ndarray:
    with open(path, "rb") as fh:
        n_rows, n_cols = struct.unpack("<ii", fh.read(8))
        data = np.frombuffer(fh.read(), dtype="<f8")
    return data.reshape(n_rows, n_cols)


def build_jsa(
    spec: ProcessSpec,
    pump: PumpSpec,
    grid: FrequencyGrid | None = None,
    n_points: int = 401,
) -> JointSpectralAmplitude:
    """Pointwise product of pump envelope and phasematching function."""
    if spec.poling_period_um is None:
        spec = spec.with_poling()
    if grid is None:
        grid = default_grid(spec, pump, n_points=n_points)
    if grid.n_points < 64:
        raise GridTooCoarse("JSA grid needs at least 64 points per axis")
    axis = grid.axis
    OS, OI = np.meshgrid(axis, axis, indexing="ij")
    values = pump_envelope(pump, OS + OI) * pm_function(spec, OS, OI)
    peak = np.max(np.abs(values))
    boundary = max(
        np.max(np.abs(values[0, :])),
        np.max(np.abs(values[-1, :])),
        np.max(np.abs(values[:, 0])),
        np.max(np.abs(values[:, -1])),
    )
    return JointSpectralAmplitude(
        grid=grid,
        values=values,
        pump=pump,
        spec=spec,
        boundary_warning=bool(boundary > 1e-3 * peak),
    )
