"""Render correlation-trajectory CSVs as the standard figure set.

Input files are consumed strictly through the public CSV schema of the
simulation CLI (header ``omega_t,mutual_information,classical_correlation,
quantum_discord``); nothing here links against the simulation package.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

CSV_HEADER = ("omega_t", "mutual_information", "classical_correlation", "quantum_discord")

FIGURE_IDS = ("fig1a", "fig1b", "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b")

# one-per-gamma discord curves; inputs are sweep outputs, one CSV per ratio
_SWEEP_FIGURES = ("fig1a", "fig1b")
# correlated-vs-factorized discord overlays
_OVERLAY_FIGURES = ("fig2a", "fig2b", "fig2c", "fig2d")
# all three quantities for both scenarios, six curves
_TRIPLE_FIGURES = ("fig3a", "fig3b")

_QUANTITY_LABELS = {
    "mutual_information": "mutual information",
    "classical_correlation": "classical correlation",
    "quantum_discord": "quantum discord",
}


class FigureInputError(ValueError):
    """Raised when an input CSV is missing, malformed, or empty; carries the path."""

    def __init__(self, path: str | Path, reason: str) -> None:
        super().__init__(f"{path}: {reason}")
        self.path = str(path)


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    input_csv_paths: tuple[str, ...]
    output_image_path: str

    def __post_init__(self) -> None:
        if self.figure_id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.figure_id!r}; expected one of {FIGURE_IDS}")
        if not self.input_csv_paths:
            raise ValueError("at least one input CSV is required")
        if self.figure_id in _OVERLAY_FIGURES + _TRIPLE_FIGURES and len(self.input_csv_paths) != 2:
            raise ValueError(
                f"{self.figure_id} takes exactly two inputs (correlated, factorized), "
                f"got {len(self.input_csv_paths)}"
            )


def spec_from_json(path: str | Path) -> FigureSpec:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: figure spec must be a JSON object")
    known = {"figure_id", "input_csv_paths", "output_image_path"}
    unknown = set(raw) - known
    if unknown:
        raise ValueError(f"{path}: unknown spec keys {sorted(unknown)}")
    try:
        return FigureSpec(
            figure_id=raw["figure_id"],
            input_csv_paths=tuple(raw["input_csv_paths"]),
            output_image_path=raw["output_image_path"],
        )
    except KeyError as exc:
        raise ValueError(f"{path}: missing spec key {exc.args[0]!r}") from exc


@dataclass
class Columns:
    omega_t: list[float] = field(default_factory=list)
    series: dict[str, list[float]] = field(default_factory=dict)


def read_columns(path: str | Path) -> Columns:
    """Parse one CSV, enforcing the exact header and at least one data row."""
    try:
        fh = open(path, newline="", encoding="ascii")
    except OSError as exc:
        raise FigureInputError(path, f"cannot read ({exc.strerror})") from exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise FigureInputError(path, "empty file, expected CSV header") from None
        if tuple(header) != CSV_HEADER:
            raise FigureInputError(path, f"unexpected header {header!r}")
        cols = Columns(series={name: [] for name in CSV_HEADER[1:]})
        for row in reader:
            if len(row) != len(CSV_HEADER):
                raise FigureInputError(path, f"row {reader.line_num} has {len(row)} cells")
            try:
                values = [float(cell) for cell in row]
            except ValueError:
                raise FigureInputError(path, f"row {reader.line_num} is not numeric") from None
            cols.omega_t.append(values[0])
            for name, value in zip(CSV_HEADER[1:], values[1:]):
                cols.series[name].append(value)
    if not cols.omega_t:
        raise FigureInputError(path, "no data rows after header")
    return cols


def sweep_label(path: str | Path) -> str:
    """Legend label for a sweep CSV, recovered from the output naming scheme."""
    stem = Path(path).stem
    marker = "_gamma_ratio_"
    if marker in stem:
        return f"gamma/omega = {stem.split(marker)[-1]}"
    return stem


def render(spec: FigureSpec) -> str:
    """Draw the requested figure and write it to spec.output_image_path."""
    data = [(path, read_columns(path)) for path in spec.input_csv_paths]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    try:
        if spec.figure_id in _SWEEP_FIGURES:
            for path, cols in data:
                ax.plot(cols.omega_t, cols.series["quantum_discord"], label=sweep_label(path))
            ax.set_ylabel("quantum discord (bits)")
        elif spec.figure_id in _OVERLAY_FIGURES:
            for (_, cols), name, style in zip(data, ("correlated", "factorized"), ("-", "-.")):
                ax.plot(cols.omega_t, cols.series["quantum_discord"], style, label=name)
            ax.set_ylabel("quantum discord (bits)")
        else:
            for (_, cols), scenario, style in zip(
                data, ("correlated", "factorized"), ("-", "--")
            ):
                for column in CSV_HEADER[1:]:
                    ax.plot(
                        cols.omega_t,
                        cols.series[column],
                        style,
                        label=f"{_QUANTITY_LABELS[column]}, {scenario}",
                    )
            ax.set_ylabel("correlations (bits)")
        ax.set_xlabel(r"$\Omega t$")
        ax.legend()
        fig.tight_layout()
        fig.savefig(spec.output_image_path)
    finally:
        plt.close(fig)
    return spec.output_image_path
