"""pdcmodes: multimode squeezed light from PDC in periodically poled waveguides.

Physics pipeline: material dispersion -> guided-mode effective index ->
phasematching and symmetric group-velocity matching (SGVM) -> joint spectral
amplitude -> Schmidt/temporal modes and squeezing -> parameter sweeps and
figure data exports.
"""

__version__ = "0.1.0"

from .errors import (
    AxisTooNarrow,
    ConfigError,
    DegeneratePoling,
    GridTooCoarse,
    MaterialFileError,
    NoInteriorMinimum,
    NoSignChange,
    NotUnimodal,
    NumericalFailure,
    OutOfValidityRange,
    PdcModesError,
    ZeroNorm,
)
from .materials import (
    MaterialModel,
    PolarizationTriple,
    SellmeierAxis,
    effective_nonlinearity,
    load_material,
)
from .dispersion import (
    BULK,
    C_UM_PER_S,
    WaveguideGeometry,
    bulk_index,
    group_velocity_dispersion,
    guided_index,
    inverse_group_velocity,
    wavevector,
)
from .phasematching import (
    MismatchResidual,
    ProcessSpec,
    TaylorCoefficients,
    mismatch,
    mismatch_residual,
    poling_period,
    sgvm_wavelength,
    taylor_coefficients,
)
from .jsa import (
    FrequencyGrid,
    JointSpectralAmplitude,
    PumpSpec,
    build_jsa,
    default_grid,
    load_jsa_binary,
    load_jsa_csv,
    pm_function,
    pump_envelope,
)
from .decomposition import (
    SchmidtDecomposition,
    SqueezingReport,
    SupermodeSet,
    decomposition_summary,
    schmidt_decompose,
    schmidt_number,
    squeezing_report,
    supermodes,
    write_modes_csv,
    write_summary_json,
)
from .modes import (
    HGParams,
    ModeProfile,
    frequency_axis_to_nm,
    fwhm,
    hg_overlap_model,
    hg_profile,
    overlap,
)
from .sweep import (
    SweepConfig,
    SweepResult,
    SweptVariable,
    find_k_minimum,
    run_sweep,
)
from .figures import figure_names, run_figure

__all__ = [
    "__version__",
    # errors
    "PdcModesError", "MaterialFileError", "OutOfValidityRange",
    "DegeneratePoling", "NoSignChange", "GridTooCoarse", "NumericalFailure",
    "NotUnimodal", "ZeroNorm", "AxisTooNarrow", "NoInteriorMinimum",
    "ConfigError",
    # materials
    "SellmeierAxis", "MaterialModel", "PolarizationTriple",
    "effective_nonlinearity", "load_material",
    # dispersion
    "BULK", "C_UM_PER_S", "WaveguideGeometry", "bulk_index", "guided_index",
    "wavevector", "inverse_group_velocity", "group_velocity_dispersion",
    # phasematching
    "ProcessSpec", "TaylorCoefficients", "MismatchResidual", "mismatch",
    "poling_period", "taylor_coefficients", "sgvm_wavelength",
    "mismatch_residual",
    # jsa
    "FrequencyGrid", "PumpSpec", "JointSpectralAmplitude", "pump_envelope",
    "pm_function", "default_grid", "build_jsa", "load_jsa_csv",
    "load_jsa_binary",
    # decomposition
    "SchmidtDecomposition", "SupermodeSet", "SqueezingReport",
    "schmidt_decompose", "schmidt_number", "supermodes", "squeezing_report",
    "decomposition_summary", "write_summary_json", "write_modes_csv",
    # modes
    "ModeProfile", "HGParams", "frequency_axis_to_nm", "fwhm", "overlap",
    "hg_profile", "hg_overlap_model",
    # sweep
    "SweptVariable", "SweepConfig", "SweepResult", "run_sweep",
    "find_k_minimum",
    # figures
    "figure_names", "run_figure",
]
