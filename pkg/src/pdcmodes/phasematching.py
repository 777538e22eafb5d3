"""Wavevector mismatch, quasi-phasematching, Taylor coefficients, SGVM root.

All frequencies are angular (rad/s); wavevectors are rad/um.  The process is
degenerate and collinear: signal and idler central frequencies both sit at
half the pump central frequency.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .dispersion import C_UM_PER_S, WaveguideGeometry, wavevector, \
    inverse_group_velocity, group_velocity_dispersion
from .errors import DegeneratePoling, NoSignChange
from .materials import MaterialModel, PolarizationTriple


@dataclass(frozen=True)
class ProcessSpec:
    """Full description of one degenerate collinear PDC process."""

    material: MaterialModel
    geometry: WaveguideGeometry
    temperature_C: float = 20.0
    polarization: PolarizationTriple = PolarizationTriple()
    pump_wavelength_um: float = 0.775
    # Signed grating term 2*pi/poling_period_um enters the mismatch; the
    # sign encodes the grating vector direction, the physical period is the
    # absolute value.
    poling_period_um: float | None = None

    @property
    def omega_p0(self) -> float:
        return 2.0 * np.pi * C_UM_PER_S / self.pump_wavelength_um

    @property
    def degenerate_wavelength_um(self) -> float:
        return 2.0 * self.pump_wavelength_um

    @property
    def pdc_type(self) -> str:
        return self.polarization.pdc_type

    def with_poling(self) -> "ProcessSpec":
        """Copy of the spec with the poling period set from poling_period()."""
        return dataclasses.replace(self, poling_period_um=poling_period(self))


@dataclass(frozen=True)
class TaylorCoefficients:
    """First and second order expansion coefficients of the mismatch."""

    gamma_s: float  # s/um
    gamma_i: float  # s/um
    delta_s: float  # s^2/um
    delta_i: float  # s^2/um
    delta_p: float  # s^2/um
    omega_p0: float  # rad/s


def _k(spec: ProcessSpec, axis: str, omega):
    lam = 2.0 * np.pi * C_UM_PER_S / np.asarray(omega, dtype=float)
    return wavevector(spec.material, axis, lam, spec.temperature_C, spec.geometry)


def mismatch(spec: ProcessSpec, omega_s, omega_i):
    """Collinear mismatch k_p - k_s - k_i minus the grating term, rad/um."""
    omega_s = np.asarray(omega_s, dtype=float)
    omega_i = np.asarray(omega_i, dtype=float)
    pol = spec.polarization
    dk = (
        _k(spec, pol.pump_axis, omega_s + omega_i)
        - _k(spec, pol.signal_axis, omega_s)
        - _k(spec, pol.idler_axis, omega_i)
    )
    if spec.poling_period_um is not None:
        dk = dk - 2.0 * np.pi / spec.poling_period_um
    return dk[()] if dk.ndim == 0 else dk


def poling_period(spec: ProcessSpec) -> float:
    """Signed period (um) whose first-order grating cancels the mismatch
    at the degenerate central frequencies."""
    bare = dataclasses.replace(spec, poling_period_um=None)
    om0 = spec.omega_p0 / 2.0
    dk0 = float(mismatch(bare, om0, om0))
    if abs(dk0) < 1e-12:
        raise DegeneratePoling(
            "central mismatch already vanishes; no poling required"
        )
    return 2.0 * np.pi / dk0


def taylor_coefficients(spec: ProcessSpec) -> TaylorCoefficients:
    """Group-velocity and dispersion coefficients about the central frequencies."""
    pol = spec.polarization
    lam_p = spec.pump_wavelength_um
    lam_d = spec.degenerate_wavelength_um
    mat, T, geo = spec.material, spec.temperature_C, spec.geometry

    kp1 = inverse_group_velocity(mat, pol.pump_axis, lam_p, T, geo)
    ks1 = inverse_group_velocity(mat, pol.signal_axis, lam_d, T, geo)
    ki1 = inverse_group_velocity(mat, pol.idler_axis, lam_d, T, geo)
    kp2 = group_velocity_dispersion(mat, pol.pump_axis, lam_p, T, geo)
    ks2 = group_velocity_dispersion(mat, pol.signal_axis, lam_d, T, geo)
    ki2 = group_velocity_dispersion(mat, pol.idler_axis, lam_d, T, geo)

    return TaylorCoefficients(
        gamma_s=float(kp1 - ks1),
        gamma_i=float(kp1 - ki1),
        delta_s=float(kp2 - ks2),
        delta_i=float(kp2 - ki2),
        delta_p=float(2.0 * kp2),
        omega_p0=spec.omega_p0,
    )


def _gamma_sum(material, geometry, T, polarization, lam_deg):
    """gamma_s + gamma_i as a function of the degenerate wavelength (um)."""
    spec = ProcessSpec(
        material=material,
        geometry=geometry,
        temperature_C=T,
        polarization=polarization,
        pump_wavelength_um=lam_deg / 2.0,
    )
    tc = taylor_coefficients(spec)
    return tc.gamma_s + tc.gamma_i


def sgvm_wavelength(
    material: MaterialModel,
    geometry: WaveguideGeometry,
    temperature_C: float = 20.0,
    polarization: PolarizationTriple = PolarizationTriple(),
    bracket: tuple[float, float] = (1.2, 1.9),
    xtol_um: float = 1e-9,
) -> float:
    """Degenerate wavelength (um) where gamma_s = -gamma_i.

    Bracketed bisection refined with secant steps; raises NoSignChange when
    the bracket does not straddle the crossing.
    """
    a, b = float(bracket[0]), float(bracket[1])
    fa = _gamma_sum(material, geometry, temperature_C, polarization, a)
    fb = _gamma_sum(material, geometry, temperature_C, polarization, b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        raise NoSignChange(
            f"gamma_s + gamma_i has constant sign on [{a}, {b}] um"
        )
    use_secant = True
    while b - a > xtol_um:
        if use_secant:
            # secant proposal, clamped strictly inside the current bracket
            x = b - fb * (b - a) / (fb - fa)
            if not (a + 0.01 * (b - a) < x < b - 0.01 * (b - a)):
                x = 0.5 * (a + b)
        else:
            # alternate with plain bisection so the bracket provably shrinks
            x = 0.5 * (a + b)
        use_secant = not use_secant
        fx = _gamma_sum(material, geometry, temperature_C, polarization, x)
        if fx == 0.0:
            return x
        if fa * fx < 0.0:
            b, fb = x, fx
        else:
            a, fa = x, fx
    return 0.5 * (a + b)


@dataclass(frozen=True)
class MismatchResidual:
    """Numerical mismatch vs its first-order model on a wavelength grid."""

    lambda_s_nm: np.ndarray  # (n,)
    lambda_i_nm: np.ndarray  # (n,)
    dk: np.ndarray  # (n, n) rad/um
    first_order: np.ndarray  # (n, n) rad/um
    residual: np.ndarray  # (n, n) rad/um, dk - first_order

    @property
    def max_ratio(self) -> float:
        """max|O| / max|F| over the grid."""
        return float(np.max(np.abs(self.residual)) / np.max(np.abs(self.first_order)))

    def to_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("lambda_s_nm,lambda_i_nm,dk,F,O\n")
            for i, ls in enumerate(self.lambda_s_nm):
                for j, li in enumerate(self.lambda_i_nm):
                    fh.write(
                        f"{ls:.9e},{li:.9e},{self.dk[i, j]:.9e},"
                        f"{self.first_order[i, j]:.9e},{self.residual[i, j]:.9e}\n"
                    )


def mismatch_residual(
    spec: ProcessSpec, half_span_nm: float = 25.0, n_points: int = 201
) -> MismatchResidual:
    """Tabulate dk, its first-order Taylor model F, and the residual O = dk - F.

    The spec must be phasematched (poling period set) so that all three
    vanish at the grid center.
    """
    if spec.poling_period_um is None:
        raise ValueError("mismatch_residual requires a phasematched spec")
    lam0 = spec.degenerate_wavelength_um
    om0 = spec.omega_p0 / 2.0
    lam = np.linspace(lam0 - half_span_nm * 1e-3, lam0 + half_span_nm * 1e-3, n_points)
    om = 2.0 * np.pi * C_UM_PER_S / lam
    OS, OI = np.meshgrid(om, om, indexing="ij")
    dk = mismatch(spec, OS, OI)
    tc = taylor_coefficients(spec)
    F = tc.gamma_s * (OS - om0) + tc.gamma_i * (OI - om0)
    return MismatchResidual(
        lambda_s_nm=lam * 1e3,
        lambda_i_nm=lam * 1e3,
        dk=dk,
        first_order=F,
        residual=dk - F,
    )
