"""Exception types for the plotting tool."""


class PlotsError(Exception):
    """Base class for all pdcmodes-plots errors."""


class RecipeError(PlotsError):
    """Recipe file is missing, malformed, or references an unknown kind."""


class SchemaMismatch(PlotsError):
    """Input CSV columns do not match the schema the recipe declares."""
