"""Mismatch, poling, Taylor expansion, and the SGVM root."""

import numpy as np
import pytest

from pdcmodes import (
    C_UM_PER_S,
    DegeneratePoling,
    NoSignChange,
    ProcessSpec,
    WaveguideGeometry,
    load_material,
    mismatch,
    mismatch_residual,
    poling_period,
    sgvm_wavelength,
    taylor_coefficients,
)


@pytest.fixture(scope="module")
def ktp():
    return load_material("ktp")


@pytest.fixture(scope="module")
def spec(ktp):
    return ProcessSpec(
        material=ktp, geometry=WaveguideGeometry(9.0, 9.0, length_mm=10.0)
    ).with_poling()


def test_poling_period_frozen(spec):
    # signed value frozen from this build; physical period is the magnitude
    assert spec.poling_period_um == pytest.approx(-55.0445986, abs=1e-4)
    assert 20.0 < abs(spec.poling_period_um) < 200.0


def test_poling_cancels_central_mismatch(spec):
    om0 = spec.omega_p0 / 2.0
    assert abs(mismatch(spec, om0, om0)) < 1e-12


def test_degenerate_poling_raises():
    class _ConstAxis:
        def index(self, lam, T):
            return 1.8 + 0.0 * np.asarray(lam)

        def d_index(self, lam, T):
            return 0.0 * np.asarray(lam)

        def d2_index(self, lam, T):
            return 0.0 * np.asarray(lam)

    class _ToyMaterial:
        def axis(self, name):
            return _ConstAxis()

        def check_range(self, lam, T):
            pass

    toy = ProcessSpec(
        material=_ToyMaterial(),
        geometry=WaveguideGeometry(1e12, 1e12),  # bulk: mismatch is exactly zero
    )
    with pytest.raises(DegeneratePoling):
        poling_period(toy)


def test_taylor_frozen_values(spec):
    tc = taylor_coefficients(spec)
    assert tc.gamma_s == pytest.approx(-1.4812197782e-16, rel=1e-8)
    assert tc.gamma_i == pytest.approx(1.4686498945e-16, rel=1e-8)
    # near the matched point the coefficients are nearly opposite
    assert abs(tc.gamma_s + tc.gamma_i) < 0.01 * abs(tc.gamma_s)


def test_taylor_matches_fd_of_mismatch(spec):
    """gamma_s/i are the first derivatives of the mismatch in each frequency."""
    tc = taylor_coefficients(spec)
    om0 = spec.omega_p0 / 2.0
    h = om0 * 1e-7
    fd_s = (mismatch(spec, om0 + h, om0) - mismatch(spec, om0 - h, om0)) / (2 * h)
    fd_i = (mismatch(spec, om0, om0 + h) - mismatch(spec, om0, om0 - h)) / (2 * h)
    assert tc.gamma_s == pytest.approx(fd_s, rel=1e-4)
    assert tc.gamma_i == pytest.approx(fd_i, rel=1e-4)


def test_sgvm_frozen(ktp):
    geo = WaveguideGeometry(9.0, 9.0)
    lam20 = sgvm_wavelength(ktp, geo, 20.0)
    lam250 = sgvm_wavelength(ktp, geo, 250.0)
    assert lam20 * 1e3 == pytest.approx(1547.9905, abs=1e-2)
    assert lam250 * 1e3 == pytest.approx(1551.8798, abs=1e-2)


def test_sgvm_is_a_root(ktp):
    geo = WaveguideGeometry(9.0, 9.0)
    lam = sgvm_wavelength(ktp, geo, 20.0)
    spec = ProcessSpec(material=ktp, geometry=geo, pump_wavelength_um=lam / 2.0)
    tc = taylor_coefficients(spec)
    assert abs(tc.gamma_s + tc.gamma_i) < 1e-21  # s/um


def test_sgvm_moves_with_geometry(ktp):
    lam_bulk = sgvm_wavelength(ktp, WaveguideGeometry(1e6, 1e6), 20.0)
    lam_9 = sgvm_wavelength(ktp, WaveguideGeometry(9.0, 9.0), 20.0)
    assert lam_bulk * 1e3 == pytest.approx(1584.58, abs=0.5)
    assert lam_9 < lam_bulk  # confinement pulls the matching point down


def test_sgvm_no_sign_change(ktp):
    with pytest.raises(NoSignChange):
        sgvm_wavelength(ktp, WaveguideGeometry(9.0, 9.0), 20.0, bracket=(1.2, 1.4))


def test_mismatch_vectorized(spec):
    om0 = spec.omega_p0 / 2.0
    om = om0 * (1 + np.linspace(-1e-3, 1e-3, 5))
    OS, OI = np.meshgrid(om, om, indexing="ij")
    dk = mismatch(spec, OS, OI)
    assert dk.shape == (5, 5)
    assert abs(dk[2, 2]) < 1e-10


def test_mismatch_residual(spec, tmp_path):
    res = mismatch_residual(spec, half_span_nm=25.0, n_points=101)
    n = 50  # center index
    assert abs(res.dk[n, n]) < 1e-10
    assert abs(res.first_order[n, n]) < 1e-10
    assert res.max_ratio < 0.1
    p = tmp_path / "res.csv"
    res.to_csv(p)
    header = p.read_text(encoding="utf-8").splitlines()[0]
    assert header == "lambda_s_nm,lambda_i_nm,dk,F,O"


def test_mismatch_residual_requires_poling(ktp):
    bare = ProcessSpec(material=ktp, geometry=WaveguideGeometry(9.0, 9.0))
    with pytest.raises(ValueError):
        mismatch_residual(bare)


def test_process_spec_properties(spec):
    assert spec.degenerate_wavelength_um == pytest.approx(1.55)
    assert spec.pdc_type == "typeII"
    assert spec.omega_p0 == pytest.approx(2 * np.pi * C_UM_PER_S / 0.775)
