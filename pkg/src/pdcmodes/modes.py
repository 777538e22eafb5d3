"""Temporal-mode metrics: FWHM, signal/idler overlap, Hermite-Gauss models."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .dispersion import C_UM_PER_S
from .errors import AxisTooNarrow, NotUnimodal, ZeroNorm


@dataclass(frozen=True)
class ModeProfile:
    axis: np.ndarray
    amplitude: np.ndarray
    order: int = 0

    def __post_init__(self):
        if len(self.axis) != len(self.amplitude):
            raise ValueError("axis and amplitude must have equal length")


def frequency_axis_to_nm(axis_rad_per_s: np.ndarray) -> np.ndarray:
    """Per-sample conversion lambda = 2 pi c / omega, in nm."""
    return 2.0 * np.pi * C_UM_PER_S / np.asarray(axis_rad_per_s) * 1e3


def fwhm(mode: ModeProfile) -> float:
    """Full width at half maximum of |amplitude|, linearly interpolated.

    Raises NotUnimodal when more than one contiguous region exceeds
    half-maximum (higher-order modes have several lobes).
    """
    y = np.abs(np.asarray(mode.amplitude, dtype=float))
    x = np.asarray(mode.axis, dtype=float)
    peak = np.max(y)
    if peak == 0.0:
        raise ZeroNorm("mode amplitude is identically zero")
    above = y > 0.5 * peak
    n_regions = int(np.sum(np.diff(above.astype(int)) == 1) + (1 if above[0] else 0))
    if n_regions != 1:
        raise NotUnimodal(f"{n_regions} regions above half maximum; expected 1")
    half = 0.5 * peak
    i = int(np.argmax(y))
    l = i
    while l > 0 and y[l] > half:
        l -= 1
    r = i
    while r < len(y) - 1 and y[r] > half:
        r += 1
    if y[l] > half or y[r] > half:
        raise NotUnimodal("half-maximum level not reached inside the axis span")
    x_left = x[l] + (half - y[l]) * (x[l + 1] - x[l]) / (y[l + 1] - y[l])
    x_right = x[r] + (half - y[r]) * (x[r - 1] - x[r]) / (y[r - 1] - y[r])
    return abs(x_right - x_left)


def overlap(a: ModeProfile, b: ModeProfile) -> float:
    """Normalized modulus of the inner product; 1 iff the profiles are
    proportional.  Profiles must share the sample axis."""
    ya = np.asarray(a.amplitude, dtype=float)
    yb = np.asarray(b.amplitude, dtype=float)
    if len(ya) != len(yb):
        raise ValueError("profiles must share a common axis")
    na = np.dot(ya, ya)
    nb = np.dot(yb, yb)
    if na == 0.0 or nb == 0.0:
        raise ZeroNorm("cannot normalize a zero profile")
    return float(abs(np.dot(ya, yb)) / np.sqrt(na * nb))


@dataclass(frozen=True)
class HGParams:
    order: int
    width: float
    center: float = 0.0

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.width <= 0:
            raise ValueError("width must be positive")


def _hermite(n: int, u: np.ndarray) -> np.ndarray:
    """Physicists' Hermite polynomial by the three-term recurrence."""
    h_prev = np.ones_like(u)
    if n == 0:
        return h_prev
    h = 2.0 * u
    for k in range(1, n):
        h, h_prev = 2.0 * u * h - 2.0 * k * h_prev, h
    return h


def hg_profile(p: HGParams, axis: np.ndarray) -> ModeProfile:
    """Discretized normalized Hermite-Gauss function on the given axis."""
    axis = np.asarray(axis, dtype=float)
    needed = (np.sqrt(2.0 * p.order + 1.0) + 4.0) * p.width
    if axis[0] > p.center - needed or axis[-1] < p.center + needed:
        raise AxisTooNarrow(
            f"axis must span at least +-{needed:g} around {p.center:g}"
        )
    u = (axis - p.center) / p.width
    import math

    norm = 1.0 / np.sqrt(math.factorial(p.order) * np.sqrt(np.pi) * 2.0**p.order * p.width)
    amp = norm * _hermite(p.order, u) * np.exp(-(u**2) / 2.0)
    return ModeProfile(axis=axis, amplitude=amp, order=p.order)


def hg_overlap_model(n: int, w: float, w_prime: float, center: float = 0.0) -> float:
    """Overlap of two same-order Hermite-Gauss modes of widths w and w'.

    Evaluated as the ratio of three cross/self kernel integrals by adaptive
    quadrature; the shared center drops out of the integrals.
    """
    if w <= 0 or w_prime <= 0:
        raise ValueError("widths must be positive")

    def kernel(a: float, b: float):
        # integral of H_n(u/a) H_n(u/b) exp(-u^2 (1/a^2 + 1/b^2) / 2) du
        alpha = 0.5 * (1.0 / a**2 + 1.0 / b**2)
        lim = (np.sqrt(2.0 * n + 1.0) + 8.0) * max(a, b)

        def f(u):
            return (
                _hermite(n, np.asarray(u) / a)
                * _hermite(n, np.asarray(u) / b)
                * np.exp(-alpha * u**2)
            )

        val, _ = quad(f, -lim, lim, limit=200, epsabs=1e-13, epsrel=1e-12)
        return val

    cross = kernel(w, w_prime)
    return float(abs(cross) / np.sqrt(kernel(w, w) * kernel(w_prime, w_prime)))
