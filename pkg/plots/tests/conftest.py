"""Shared fixtures: small schema-faithful CSV inputs written on the fly."""

import pytest

import _plots_acceptance_log


def pytest_terminal_summary(terminalreporter):
    if _plots_acceptance_log.LINES:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria (plots):")
        for line in _plots_acceptance_log.LINES:
            terminalreporter.write_line(line)

SGVM_CSV = (
    "temperature_C,lambda_sgvm,error\n"
    "2.000000000e+01,1.547990000e+03,\n"
    "1.000000000e+02,1.549200000e+03,\n"
    "2.500000000e+02,1.551880000e+03,\n"
)

K_MULTI_CSV = (
    "pump_width_nm,waveguide_wh_um,K,retained_mode_count,error\n"
    "1.000000000e+00,6.000000000e+00,1.500000000e+00,5.000000000e+00,\n"
    "1.000000000e+00,9.000000000e+00,1.300000000e+00,4.000000000e+00,\n"
    "2.000000000e+00,6.000000000e+00,2.100000000e+00,9.000000000e+00,\n"
    "2.000000000e+00,9.000000000e+00,1.900000000e+00,8.000000000e+00,\n"
)

SURFACE_CSV = (
    "waveguide_w_um,waveguide_h_um,lambda_sgvm,error\n"
    "4.000000000e+00,4.000000000e+00,1.500000000e+03,\n"
    "4.000000000e+00,9.000000000e+00,1.530000000e+03,\n"
    "9.000000000e+00,4.000000000e+00,1.528000000e+03,\n"
    "9.000000000e+00,9.000000000e+00,1.548000000e+03,\n"
)

HEATMAP_CSV = (
    "lambda_nm,1.549000000e+03,1.550000000e+03,1.551000000e+03\n"
    "1.549000000e+03,0.1,0.2,0.1\n"
    "1.550000000e+03,0.2,0.9,0.2\n"
    "1.551000000e+03,0.1,0.2,0.1\n"
)


@pytest.fixture
def data_dir(tmp_path):
    (tmp_path / "sgvm_vs_temperature.csv").write_text(SGVM_CSV, encoding="utf-8")
    (tmp_path / "k_vs_pump_width.csv").write_text(K_MULTI_CSV, encoding="utf-8")
    (tmp_path / "sgvm_surface.csv").write_text(SURFACE_CSV, encoding="utf-8")
    (tmp_path / "jsa_type2.csv").write_text(HEATMAP_CSV, encoding="utf-8")
    return tmp_path
