"""Command-line entry point: ``plot <recipe> -o <file>``.

``<recipe>`` is either a path to a recipe JSON file or the name of a bundled
recipe (``plot --list`` shows them).  Exit codes: 0 success, 1 recipe/usage
error, 2 input schema mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .errors import RecipeError, SchemaMismatch
from .recipes import bundled_recipe_names, load_recipe
from .render import render

EXIT_OK = 0
EXIT_RECIPE = 1
EXIT_SCHEMA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_RECIPE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plot", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("recipe", nargs="?", help="recipe JSON path or bundled name")
    parser.add_argument("-o", "--output", help="output image path (.png, .pdf, .svg)")
    parser.add_argument(
        "--data-dir", default=".", help="directory holding the input CSV files"
    )
    parser.add_argument(
        "--list", action="store_true", help="list bundled recipe names and exit"
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.list:
        for name in bundled_recipe_names():
            print(name)
        return EXIT_OK
    if not args.recipe or not args.output:
        parser.print_usage(sys.stderr)
        print("plot: error: recipe and -o/--output are required", file=sys.stderr)
        return EXIT_RECIPE
    try:
        recipe = load_recipe(args.recipe)
        render(recipe, args.output, data_dir=args.data_dir)
    except SchemaMismatch as exc:
        print(f"error: schema mismatch: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except RecipeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RECIPE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RECIPE
    print(f"wrote {args.output}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
