"""Command line front end: `discord-figures plot ...`."""

from __future__ import annotations

import argparse
import sys

from .plots import FIGURE_IDS, FigureInputError, FigureSpec, render, spec_from_json


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="discord-figures")
    sub = parser.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="render one figure from correlation CSVs")
    plot.add_argument("--figure", choices=FIGURE_IDS, help="which figure to draw")
    plot.add_argument("--inputs", help="comma-separated CSV paths, ordered")
    plot.add_argument("--out", help="output image path")
    plot.add_argument("--spec", help="JSON file holding figure_id/input_csv_paths/output_image_path")
    return parser


def _spec_from_args(args: argparse.Namespace) -> FigureSpec:
    if args.spec is not None:
        if args.figure or args.inputs or args.out:
            raise ValueError("--spec replaces --figure/--inputs/--out; pass one or the other")
        try:
            return spec_from_json(args.spec)
        except OSError as exc:
            raise ValueError(f"cannot read spec file {args.spec}: {exc.strerror}") from exc
    missing = [flag for flag, v in (("--figure", args.figure), ("--inputs", args.inputs), ("--out", args.out)) if not v]
    if missing:
        raise ValueError(f"missing required arguments: {', '.join(missing)}")
    paths = tuple(part.strip() for part in args.inputs.split(","))
    if any(not p for p in paths):
        raise ValueError("--inputs contains an empty path")
    return FigureSpec(figure_id=args.figure, input_csv_paths=paths, output_image_path=args.out)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = _spec_from_args(args)
        written = render(spec)
    except FigureInputError as exc:
        print(f"error: bad input CSV: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {written}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
