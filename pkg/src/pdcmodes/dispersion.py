"""Guided refractive index, wavevector, and its frequency derivatives.

The rectangular waveguide is treated in the metallic (perfectly conducting
wall) approximation: the transverse momentum of mode (n1, n2) is subtracted
from the bulk dispersion,

    n_eff(lam)^2 = n_bulk(lam, T)^2
                   - (lam * (n1+1) / (2 h))^2 - (lam * (n2+1) / (2 w))^2,

which reduces to the bulk index as w, h -> infinity and lowers the index as
the cross-section shrinks or the mode order grows (mode approaching cutoff).
Derivatives with respect to angular frequency are evaluated in closed form
through dn/dlam of the Sellmeier expression, which keeps them exact and
leaves finite differences available as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfValidityRange
from .materials import MaterialModel

# Speed of light in um/s: all wavevectors are rad/um, frequencies rad/s.
C_UM_PER_S = 299_792_458e6


@dataclass(frozen=True)
class WaveguideGeometry:
    """Rectangular waveguide cross-section, guided-mode order, and length.

    Default axes follow the only orientation with telecom SGVM in KTP:
    propagation along x, crystal cut (vertical polarization) along z.
    """

    width_um: float = 9.0
    height_um: float = 9.0
    n1: int = 0
    n2: int = 0
    length_mm: float = 10.0
    propagation_axis: str = "x"
    cut_axis: str = "z"

    def __post_init__(self):
        if self.width_um <= 0 or self.height_um <= 0:
            raise ValueError("waveguide cross-section must be positive")
        if self.length_mm <= 0:
            raise ValueError("waveguide length must be positive")
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("mode indices must be non-negative")

    @property
    def length_um(self) -> float:
        return self.length_mm * 1e3

    @property
    def transverse_term(self) -> float:
        """((n1+1)/2h)^2 + ((n2+1)/2w)^2 in 1/um^2."""
        return ((self.n1 + 1) / (2 * self.height_um)) ** 2 + (
            (self.n2 + 1) / (2 * self.width_um)
        ) ** 2


BULK = WaveguideGeometry(width_um=1e12, height_um=1e12)


def bulk_index(material: MaterialModel, axis: str, lam_um, T_C: float):
    """Temperature-dependent Sellmeier index for one optical axis."""
    material.check_range(lam_um, T_C)
    return material.axis(axis).index(lam_um, T_C)


def _guided_n_and_derivs(material, axis, lam, T, geometry):
    """(n_eff, dn_eff/dlam, d2n_eff/dlam2), all closed form."""
    ax = material.axis(axis)
    n = ax.index(lam, T)
    dn = ax.d_index(lam, T)
    d2n = ax.d2_index(lam, T)
    G = geometry.transverse_term
    n_eff2 = n**2 - lam**2 * G
    if np.any(n_eff2 <= 0):
        raise OutOfValidityRange(
            "guided mode beyond cutoff: transverse momentum exceeds bulk index"
        )
    n_eff = np.sqrt(n_eff2)
    dn_eff = (n * dn - lam * G) / n_eff
    d2n_eff = (dn**2 + n * d2n - G - dn_eff**2) / n_eff
    return n_eff, dn_eff, d2n_eff


def guided_index(material, axis, lam_um, T_C, geometry: WaveguideGeometry):
    """Effective index of the (n1, n2) mode in the metallic approximation."""
    material.check_range(lam_um, T_C)
    lam = np.asarray(lam_um, dtype=float)
    n_eff, _, _ = _guided_n_and_derivs(material, axis, lam, T_C, geometry)
    return n_eff


def wavevector(material, axis, lam_um, T_C, geometry: WaveguideGeometry):
    """k = (2 pi / lam) n_eff, in rad/um."""
    lam = np.asarray(lam_um, dtype=float)
    return 2.0 * np.pi / lam * guided_index(material, axis, lam, T_C, geometry)


def inverse_group_velocity(material, axis, lam_um, T_C, geometry: WaveguideGeometry):
    """dk/domega in s/um (the inverse group velocity n_group / c)."""
    material.check_range(lam_um, T_C)
    lam = np.asarray(lam_um, dtype=float)
    n_eff, dn_eff, _ = _guided_n_and_derivs(material, axis, lam, T_C, geometry)
    return (n_eff - lam * dn_eff) / C_UM_PER_S


def group_velocity_dispersion(material, axis, lam_um, T_C, geometry: WaveguideGeometry):
    """d2k/domega2 in s^2/um."""
    material.check_range(lam_um, T_C)
    lam = np.asarray(lam_um, dtype=float)
    _, _, d2n_eff = _guided_n_and_derivs(material, axis, lam, T_C, geometry)
    return lam**3 / (2.0 * np.pi * C_UM_PER_S**2) * d2n_eff
