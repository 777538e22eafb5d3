"""Command-line interface.

Subcommands: ``material validate``, ``sgvm find``, ``jsa build``,
``schmidt``, ``sweep run``, ``figures``.  Exit codes: 0 success, 1
configuration/usage error, 2 physics-range or numerical error.  Diagnostics
go to standard error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .decomposition import schmidt_decompose, write_summary_json
from .dispersion import C_UM_PER_S, WaveguideGeometry
from .errors import ConfigError, MaterialFileError, PdcModesError
from .figures import figure_names, run_figure
from .jsa import (
    FrequencyGrid,
    JointSpectralAmplitude,
    PumpSpec,
    build_jsa,
    load_jsa_binary,
    load_jsa_csv,
)
from .materials import load_material
from .phasematching import (
    ProcessSpec,
    mismatch_residual,
    sgvm_wavelength,
    taylor_coefficients,
)
from .sweep import SweepConfig, run_sweep

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_PHYSICS = 2


class _Parser(argparse.ArgumentParser):
    """Argparse variant whose usage errors exit with the config error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def _add_geometry_args(p, length: bool = True):
    p.add_argument("--material", default="ktp", help="material name or file path")
    p.add_argument("--w", type=float, default=9.0, help="waveguide width (um)")
    p.add_argument("--h", type=float, default=9.0, help="waveguide height (um)")
    p.add_argument("--temp", type=float, default=20.0, help="temperature (degC)")
    if length:
        p.add_argument("--length", type=float, default=10.0, help="length (mm)")


def _geometry(args, length: bool = True) -> WaveguideGeometry:
    return WaveguideGeometry(
        width_um=args.w,
        height_um=args.h,
        length_mm=getattr(args, "length", 10.0) if length else 10.0,
    )


def _cmd_material_validate(args) -> int:
    material = load_material(args.file)
    print(f"ok: {material.name} ({material.source_citation})")
    return EXIT_OK


def _cmd_sgvm_find(args) -> int:
    material = load_material(args.material)
    geometry = _geometry(args)
    lam = sgvm_wavelength(material, geometry, args.temp)
    spec = ProcessSpec(
        material=material,
        geometry=geometry,
        temperature_C=args.temp,
        pump_wavelength_um=lam / 2.0,
    ).with_poling()
    tc = taylor_coefficients(spec)
    res = mismatch_residual(spec)
    print(f"lambda_sgvm_nm = {lam * 1e3:.6f}")
    print(f"poling_period_um = {spec.poling_period_um:.6f}")
    print(f"gamma_s_s_per_um = {tc.gamma_s:.9e}")
    print(f"gamma_i_s_per_um = {tc.gamma_i:.9e}")
    print(f"delta_s_s2_per_um = {tc.delta_s:.9e}")
    print(f"delta_i_s2_per_um = {tc.delta_i:.9e}")
    print(f"delta_p_s2_per_um = {tc.delta_p:.9e}")
    print(f"residual_ratio = {res.max_ratio:.6f}")
    return EXIT_OK


def _cmd_jsa_build(args) -> int:
    material = load_material(args.material)
    spec = ProcessSpec(
        material=material,
        geometry=_geometry(args),
        temperature_C=args.temp,
        pump_wavelength_um=args.pump_wavelength,
    ).with_poling()
    pump = PumpSpec(wavelength_um=args.pump_wavelength, width_nm=args.pump_width)
    amp = build_jsa(spec, pump, n_points=args.points)
    if amp.boundary_warning:
        print("warning: JSA is not negligible at the grid boundary", file=sys.stderr)
    if args.output.endswith(".bin"):
        amp.to_binary(args.output)
    else:
        amp.to_csv(args.output)
    print(f"wrote {args.output}")
    return EXIT_OK


def _load_jsa_file(path: str) -> JointSpectralAmplitude:
    """Rebuild a bare JSA object (grid + values) from a CSV or binary file."""
    if path.endswith(".bin"):
        values = load_jsa_binary(path)
        n = values.shape[0]
        # the binary format carries no axis: use a unit-spacing grid, which
        # leaves coefficients, K, and the squeezing summary unchanged
        grid = FrequencyGrid(center=float(n), half_span=(n - 1) / 2.0, n_points=n)
    else:
        lam_s, _, values = load_jsa_csv(path)
        omega = 2.0 * np.pi * C_UM_PER_S / (lam_s * 1e-3)
        grid = FrequencyGrid(
            center=float(0.5 * (omega[0] + omega[-1])),
            half_span=float(0.5 * abs(omega[-1] - omega[0])),
            n_points=len(omega),
        )
    return JointSpectralAmplitude(grid=grid, values=values, pump=PumpSpec(), spec=None)


def _cmd_schmidt(args) -> int:
    try:
        amp = _load_jsa_file(args.file)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read JSA file {args.file}: {exc}") from exc
    dec = schmidt_decompose(
        amp, truncation=args.truncation, pair_degenerate=args.pair_degenerate
    )
    write_summary_json(dec, args.output, gain=args.gain)
    print(f"wrote {args.output}")
    return EXIT_OK


def _cmd_sweep_run(args) -> int:
    cfg = SweepConfig.from_json(args.config)
    result = run_sweep(cfg, workers=args.workers)
    result.write_csv(args.out_csv)
    result.write_json(args.out_json)
    print(f"wrote {args.out_csv} and {args.out_json}")
    return EXIT_OK


def _cmd_figures(args) -> int:
    if args.name not in figure_names():
        raise ConfigError(
            f"unknown figure {args.name!r}; available: {', '.join(figure_names())}"
        )
    paths = run_figure(args.name, args.outdir, workers=args.workers)
    for p in paths:
        print(f"wrote {p}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pdcmodes", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_mat = sub.add_parser("material", help="material data operations")
    mat_sub = p_mat.add_subparsers(dest="subcommand", required=True)
    p_val = mat_sub.add_parser("validate", help="validate a material data file")
    p_val.add_argument("file")
    p_val.set_defaults(func=_cmd_material_validate)

    p_sgvm = sub.add_parser("sgvm", help="group-velocity matching")
    sgvm_sub = p_sgvm.add_subparsers(dest="subcommand", required=True)
    p_find = sgvm_sub.add_parser("find", help="locate the SGVM wavelength")
    _add_geometry_args(p_find)
    p_find.set_defaults(func=_cmd_sgvm_find)

    p_jsa = sub.add_parser("jsa", help="joint spectral amplitude")
    jsa_sub = p_jsa.add_subparsers(dest="subcommand", required=True)
    p_build = jsa_sub.add_parser("build", help="compute and write the JSA")
    _add_geometry_args(p_build)
    p_build.add_argument("--pump-wavelength", type=float, default=0.775,
                         help="pump central wavelength (um)")
    p_build.add_argument("--pump-width", type=float, default=4.0,
                         help="pump amplitude 1/e half-width (nm)")
    p_build.add_argument("--points", type=int, default=401, help="grid points per axis")
    p_build.add_argument("-o", "--output", required=True,
                         help="output path (.csv, or .bin for binary)")
    p_build.set_defaults(func=_cmd_jsa_build)

    p_sch = sub.add_parser("schmidt", help="decompose a JSA file")
    p_sch.add_argument("file", help="JSA file written by 'jsa build'")
    p_sch.add_argument("-o", "--output", required=True, help="summary JSON path")
    p_sch.add_argument("--truncation", type=float, default=1e-3)
    p_sch.add_argument("--gain", type=float, default=1.0)
    p_sch.add_argument("--pair-degenerate", action="store_true",
                       help="re-pair modes inside near-degenerate coefficient groups")
    p_sch.set_defaults(func=_cmd_schmidt)

    p_sw = sub.add_parser("sweep", help="parameter sweeps")
    sw_sub = p_sw.add_subparsers(dest="subcommand", required=True)
    p_run = sw_sub.add_parser("run", help="run a sweep from a JSON config")
    p_run.add_argument("config")
    p_run.add_argument("--out-csv", default="sweep.csv")
    p_run.add_argument("--out-json", default="sweep.json")
    p_run.add_argument("--workers", type=int, default=1)
    p_run.set_defaults(func=_cmd_sweep_run)

    p_fig = sub.add_parser("figures", help="regenerate a named figure's data")
    p_fig.add_argument("name", help=f"one of: {', '.join(figure_names())}")
    p_fig.add_argument("--outdir", default=".")
    p_fig.add_argument("--workers", type=int, default=1)
    p_fig.set_defaults(func=_cmd_figures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (ConfigError, MaterialFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PdcModesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
