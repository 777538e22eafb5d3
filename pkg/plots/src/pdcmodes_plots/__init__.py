"""pdcmodes-plots: batch renderer for pdcmodes CSV/JSON outputs.

Strictly read-only over its inputs and free of any physics: every figure is
described by a JSON recipe (one bundled per upstream figure) that names the
input file, the expected CSV schema, the figure kind, and annotations.
"""

__version__ = "0.1.0"

from .errors import PlotsError, RecipeError, SchemaMismatch
from .recipes import PlotRecipe, bundled_recipe_names, load_recipe
from .render import render

__all__ = [
    "__version__",
    "PlotsError",
    "RecipeError",
    "SchemaMismatch",
    "PlotRecipe",
    "bundled_recipe_names",
    "load_recipe",
    "render",
]
