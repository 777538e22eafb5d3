"""Exception types raised by the physics and I/O layers."""


class PdcModesError(Exception):
    """Base class for all package errors."""


class MaterialFileError(PdcModesError):
    """Material data file is missing, malformed, or incomplete."""


class OutOfValidityRange(PdcModesError):
    """Wavelength or temperature outside the material's declared validity."""


class DegeneratePoling(PdcModesError):
    """Bare mismatch at the central frequencies is (numerically) zero."""


class NoSignChange(PdcModesError):
    """Root bracket does not straddle a sign change."""


class GridTooCoarse(PdcModesError):
    """Frequency grid has too few points to resolve the JSA."""


class NumericalFailure(PdcModesError):
    """A numerical routine (e.g. SVD) failed to converge."""


class NotUnimodal(PdcModesError):
    """Profile has more than one region above half maximum."""


class ZeroNorm(PdcModesError):
    """Profile is identically zero."""


class AxisTooNarrow(PdcModesError):
    """Sample axis does not cover the support of the requested mode."""


class NoInteriorMinimum(PdcModesError):
    """Scanned observable has no interior minimum inside the bracket."""


class ConfigError(PdcModesError):
    """Sweep or CLI configuration is invalid."""
