"""Mode metrics: FWHM, overlap, and Hermite-Gauss profiles/models."""

import numpy as np
import pytest

from pdcmodes import (
    AxisTooNarrow,
    HGParams,
    ModeProfile,
    NotUnimodal,
    ZeroNorm,
    frequency_axis_to_nm,
    fwhm,
    hg_overlap_model,
    hg_profile,
    overlap,
)
from pdcmodes.dispersion import C_UM_PER_S


def test_fwhm_gaussian():
    x = np.linspace(-10, 10, 4001)
    sigma = 1.3
    m = ModeProfile(x, np.exp(-(x**2) / (2 * sigma**2)))
    assert fwhm(m) == pytest.approx(2 * np.sqrt(2 * np.log(2)) * sigma, rel=1e-4)


def test_fwhm_sign_insensitive():
    x = np.linspace(-10, 10, 4001)
    m = ModeProfile(x, -np.exp(-(x**2) / 2))
    assert fwhm(m) == pytest.approx(2 * np.sqrt(2 * np.log(2)), rel=1e-4)


def test_fwhm_rejects_multilobe():
    x = np.linspace(-8, 8, 2001)
    two_lobes = x * np.exp(-(x**2) / 2)  # first Hermite-Gauss shape
    with pytest.raises(NotUnimodal):
        fwhm(ModeProfile(x, two_lobes))


def test_fwhm_zero_profile():
    x = np.linspace(-1, 1, 101)
    with pytest.raises(ZeroNorm):
        fwhm(ModeProfile(x, np.zeros_like(x)))


def test_fwhm_truncated_peak():
    x = np.linspace(-0.5, 0.5, 101)  # half max never reached inside the span
    with pytest.raises(NotUnimodal):
        fwhm(ModeProfile(x, np.exp(-(x**2) / 2)))


def test_overlap_basics():
    x = np.linspace(-8, 8, 2001)
    g = np.exp(-(x**2) / 2)
    assert overlap(ModeProfile(x, g), ModeProfile(x, -3.0 * g)) == pytest.approx(1.0)
    h1 = x * g
    assert overlap(ModeProfile(x, g), ModeProfile(x, h1)) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ZeroNorm):
        overlap(ModeProfile(x, g), ModeProfile(x, np.zeros_like(x)))
    with pytest.raises(ValueError):
        overlap(ModeProfile(x, g), ModeProfile(x[:-1], g[:-1]))


def test_overlap_shifted_gaussians_closed_form():
    x = np.linspace(-20, 20, 8001)
    s, d = 1.1, 0.7
    a = np.exp(-(x**2) / (2 * s**2))
    b = np.exp(-((x - d) ** 2) / (2 * s**2))
    assert overlap(ModeProfile(x, a), ModeProfile(x, b)) == pytest.approx(
        np.exp(-(d**2) / (4 * s**2)), rel=1e-8
    )


def test_gaussian_width_mismatch_closed_form():
    """Same-center Gaussians of widths w, w': overlap sqrt(2 w w' / (w^2+w'^2))."""
    w, wp = 1.0, 1.25
    expected = np.sqrt(2 * w * wp / (w**2 + wp**2))
    assert hg_overlap_model(0, w, wp) == pytest.approx(expected, abs=1e-8)
    x = np.linspace(-30, 30, 20001)
    a = hg_profile(HGParams(0, w), x)
    b = hg_profile(HGParams(0, wp), x)
    assert overlap(a, b) == pytest.approx(expected, abs=1e-8)


def test_hg_profile_normalized_orthogonal():
    x = np.linspace(-40, 40, 16001)
    dx = x[1] - x[0]
    profs = [hg_profile(HGParams(n, 1.7, center=0.5), x) for n in range(5)]
    for i, p in enumerate(profs):
        assert dx * np.sum(p.amplitude**2) == pytest.approx(1.0, abs=1e-8)
        for q in profs[:i]:
            assert dx * np.sum(p.amplitude * q.amplitude) == pytest.approx(0.0, abs=1e-8)


def test_hg_profile_axis_too_narrow():
    x = np.linspace(-3, 3, 101)
    with pytest.raises(AxisTooNarrow):
        hg_profile(HGParams(4, 1.0), x)


def test_hg_params_validation():
    with pytest.raises(ValueError):
        HGParams(-1, 1.0)
    with pytest.raises(ValueError):
        HGParams(0, 0.0)
    with pytest.raises(ValueError):
        hg_overlap_model(1, -1.0, 1.0)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_hg_overlap_model_matches_sampled(n):
    """Quadrature model equals the densely sampled discrete overlap."""
    w, wp = 1.0, 1.3
    x = np.linspace(-40, 40, 40001)
    a = hg_profile(HGParams(n, w), x)
    b = hg_profile(HGParams(n, wp), x)
    assert hg_overlap_model(n, w, wp) == pytest.approx(overlap(a, b), abs=1e-8)


def test_hg_overlap_model_decreases_with_order():
    """A fixed relative width mismatch hurts higher orders more."""
    vals = [hg_overlap_model(n, 1.0, 1.1) for n in range(5)]
    assert np.all(np.diff(vals) < 0)
    assert all(0 < v <= 1 for v in vals)


def test_frequency_axis_to_nm_roundtrip():
    lam_nm = np.array([1540.0, 1550.0, 1560.0])
    om = 2 * np.pi * C_UM_PER_S / (lam_nm * 1e-3)
    np.testing.assert_allclose(frequency_axis_to_nm(om), lam_nm, rtol=1e-12)


def test_mode_profile_validation():
    with pytest.raises(ValueError):
        ModeProfile(np.arange(3.0), np.arange(4.0))
