"""Plot recipes: one JSON document per figure, bundled with the package.

A recipe pins the input file name, the exact CSV header it expects, the
figure kind, which columns play which role, and any reference annotations
(horizontal bands, diagonal guides).  Recipes are data, not code, so they
are versioned together with the golden CSVs they render.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .errors import RecipeError

KINDS = ("line", "multi-line", "surface", "heatmap")


@dataclass(frozen=True)
class PlotRecipe:
    name: str
    kind: str
    input: str
    columns: tuple[str, ...] = ()  # exact expected CSV header (empty: dense)
    x: str | None = None
    y: tuple[str, ...] = ()
    series: str | None = None  # multi-line: column whose values split curves
    z: str | None = None  # surface: value column
    xlabel: str = ""
    ylabel: str = ""
    title: str = ""
    logy: bool = False
    annotations: tuple[dict, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RecipeError(f"unknown figure kind {self.kind!r}")
        if self.kind in ("line", "multi-line") and (self.x is None or not self.y):
            raise RecipeError(f"{self.name}: kind {self.kind} needs 'x' and 'y'")
        if self.kind == "surface" and (self.x is None or not self.y or self.z is None):
            raise RecipeError(f"{self.name}: surface needs 'x', 'y', and 'z'")


def _from_doc(doc: dict, origin: str) -> PlotRecipe:
    if not isinstance(doc, dict):
        raise RecipeError(f"{origin}: recipe must be a JSON object")
    known = {
        "name", "kind", "input", "columns", "x", "y", "series", "z",
        "xlabel", "ylabel", "title", "logy", "annotations",
    }
    unknown = set(doc) - known
    if unknown:
        raise RecipeError(f"{origin}: unknown recipe keys: {', '.join(sorted(unknown))}")
    try:
        y = doc.get("y", [])
        return PlotRecipe(
            name=doc["name"],
            kind=doc["kind"],
            input=doc["input"],
            columns=tuple(doc.get("columns", [])),
            x=doc.get("x"),
            y=tuple([y] if isinstance(y, str) else y),
            series=doc.get("series"),
            z=doc.get("z"),
            xlabel=doc.get("xlabel", ""),
            ylabel=doc.get("ylabel", ""),
            title=doc.get("title", ""),
            logy=bool(doc.get("logy", False)),
            annotations=tuple(doc.get("annotations", [])),
        )
    except KeyError as exc:
        raise RecipeError(f"{origin}: missing recipe key {exc}") from exc


def bundled_recipe_names() -> list[str]:
    root = resources.files("pdcmodes_plots").joinpath("recipes")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_recipe(name_or_path: str) -> PlotRecipe:
    """Load a recipe from a JSON file path or a bundled recipe name."""
    if name_or_path.endswith(".json"):
        try:
            with open(name_or_path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as exc:
            raise RecipeError(f"cannot read recipe {name_or_path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise RecipeError(f"{name_or_path}: invalid JSON: {exc}") from exc
        return _from_doc(doc, name_or_path)
    ref = resources.files("pdcmodes_plots").joinpath("recipes", name_or_path + ".json")
    try:
        doc = json.loads(ref.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise RecipeError(
            f"no bundled recipe {name_or_path!r}; "
            f"available: {', '.join(bundled_recipe_names())}"
        ) from exc
    return _from_doc(doc, f"bundled:{name_or_path}")
