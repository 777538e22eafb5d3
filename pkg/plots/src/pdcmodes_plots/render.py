"""Read-only rendering of recipe-described CSV files into image files."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .errors import RecipeError, SchemaMismatch
from .recipes import PlotRecipe


def _read_table(path: str, expected: tuple[str, ...]) -> dict[str, np.ndarray]:
    """Load a sweep-style CSV, enforcing the exact expected header.

    Rows whose ``error`` cell is non-empty are dropped (failed sweep points);
    remaining cells are parsed as floats, empty cells as NaN.
    """
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaMismatch(f"{path}: empty file") from None
        if tuple(header) != tuple(expected):
            missing = set(expected) - set(header)
            extra = set(header) - set(expected)
            raise SchemaMismatch(
                f"{path}: header mismatch"
                + (f"; missing: {', '.join(sorted(missing))}" if missing else "")
                + (f"; unexpected: {', '.join(sorted(extra))}" if extra else "")
            )
        rows = [r for r in reader if r]
    err_idx = header.index("error") if "error" in header else None
    cols: dict[str, list[float]] = {h: [] for h in header if h != "error"}
    for r in rows:
        if err_idx is not None and r[err_idx].strip():
            continue
        for h, cell in zip(header, r):
            if h == "error":
                continue
            cols[h].append(float(cell) if cell.strip() else np.nan)
    return {h: np.asarray(v) for h, v in cols.items()}


def _read_dense(path: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Load a dense matrix CSV whose first row/column carry the axes."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
    if not header or header[0] != "lambda_nm":
        raise SchemaMismatch(f"{path}: dense matrix header must start with 'lambda_nm'")
    try:
        raw = np.loadtxt(path, delimiter=",", skiprows=1)
    except ValueError as exc:
        raise SchemaMismatch(f"{path}: non-numeric matrix body: {exc}") from exc
    col_axis = np.array([float(v) for v in header[1:]])
    if raw.ndim != 2 or raw.shape[1] != len(col_axis) + 1:
        raise SchemaMismatch(f"{path}: matrix body does not match header width")
    return raw[:, 0], col_axis, raw[:, 1:]


def _apply_annotations(ax, recipe: PlotRecipe) -> None:
    for ann in recipe.annotations:
        kind = ann.get("type")
        if kind == "hband":
            ax.axhspan(ann["lo"], ann["hi"], color=ann.get("color", "green"), alpha=0.25)
        elif kind == "vband":
            ax.axvspan(ann["lo"], ann["hi"], color=ann.get("color", "green"), alpha=0.25)
        elif kind == "hline":
            ax.axhline(ann["value"], color=ann.get("color", "gray"), ls="--", lw=0.8)
        elif kind == "vline":
            ax.axvline(ann["value"], color=ann.get("color", "gray"), ls="--", lw=0.8)
        else:
            raise RecipeError(f"{recipe.name}: unknown annotation type {kind!r}")


def _finish(ax, recipe: PlotRecipe):
    ax.set_xlabel(recipe.xlabel)
    ax.set_ylabel(recipe.ylabel)
    if recipe.title:
        ax.set_title(recipe.title)
    if recipe.logy:
        ax.set_yscale("log")


def _render_line(ax, recipe, data):
    for col in recipe.y:
        ax.plot(data[recipe.x], data[col], marker=".", label=col)
    if len(recipe.y) > 1:
        ax.legend()


def _render_multi_line(ax, recipe, data):
    svals = np.unique(data[recipe.series])
    for sv in svals:
        sel = data[recipe.series] == sv
        for col in recipe.y:
            label = f"{recipe.series}={sv:g}" + (f" {col}" if len(recipe.y) > 1 else "")
            ax.plot(data[recipe.x][sel], data[col][sel], marker=".", label=label)
    ax.legend()


def _render_surface(fig, ax, recipe, data):
    xs = np.unique(data[recipe.x])
    ys = np.unique(data[recipe.y[0]])
    grid = np.full((len(xs), len(ys)), np.nan)
    xi = np.searchsorted(xs, data[recipe.x])
    yi = np.searchsorted(ys, data[recipe.y[0]])
    grid[xi, yi] = data[recipe.z]
    mesh = ax.pcolormesh(ys, xs, grid, shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label=recipe.z)
    # bands apply to the surface values: outline the band region instead
    for ann in recipe.annotations:
        if ann.get("type") == "zband":
            ax.contour(
                ys, xs, grid, levels=[ann["lo"], ann["hi"]],
                colors=ann.get("color", "green"),
            )
    ax.set_xlabel(recipe.ylabel)
    ax.set_ylabel(recipe.xlabel)
    if recipe.title:
        ax.set_title(recipe.title)


def _render_heatmap(fig, ax, recipe, path):
    row_axis, col_axis, values = _read_dense(path)
    mesh = ax.pcolormesh(col_axis, row_axis, values, shading="nearest", cmap="RdBu_r")
    fig.colorbar(mesh, ax=ax)
    for ann in recipe.annotations:
        kind = ann.get("type")
        if kind == "diag_guides":
            # +-45 degree guides through the matrix center
            c_r, c_c = np.mean(row_axis), np.mean(col_axis)
            span = (np.max(col_axis) - np.min(col_axis)) / 2.0
            t = np.linspace(-span, span, 2)
            ax.plot(c_c + t, c_r + t, color="k", ls="--", lw=0.8)
            ax.plot(c_c + t, c_r - t, color="k", ls="--", lw=0.8)
        elif kind in ("hband", "vband", "hline", "vline"):
            _apply_annotations(ax, PlotRecipe(
                name=recipe.name, kind="line", input=recipe.input,
                x="_", y=("_",), annotations=(ann,),
            ))
    _finish(ax, recipe)


def render(recipe: PlotRecipe, output: str, data_dir: str = ".") -> str:
    """Render one recipe to ``output``; returns the written path."""
    path = os.path.join(data_dir, recipe.input)
    if not os.path.exists(path):
        raise RecipeError(f"input file not found: {path}")
    fig, ax = plt.subplots(figsize=(6.0, 4.2), dpi=150)
    try:
        if recipe.kind == "heatmap":
            _render_heatmap(fig, ax, recipe, path)
        else:
            data = _read_table(path, recipe.columns)
            for col in (recipe.x, recipe.series, recipe.z, *recipe.y):
                if col is not None and col not in data:
                    raise SchemaMismatch(
                        f"{recipe.name}: recipe references column {col!r} "
                        "absent from its own schema"
                    )
            if recipe.kind == "line":
                _render_line(ax, recipe, data)
                _apply_annotations(ax, recipe)
                _finish(ax, recipe)
            elif recipe.kind == "multi-line":
                _render_multi_line(ax, recipe, data)
                _apply_annotations(ax, recipe)
                _finish(ax, recipe)
            elif recipe.kind == "surface":
                _render_surface(fig, ax, recipe, data)
        fig.tight_layout()
        fig.savefig(output)
    finally:
        plt.close(fig)
    return output
