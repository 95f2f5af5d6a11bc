"""Figure rendering for correlation-trajectory CSVs."""

from .plots import (
    CSV_HEADER,
    FIGURE_IDS,
    Columns,
    FigureInputError,
    FigureSpec,
    read_columns,
    render,
    spec_from_json,
    sweep_label,
)

__all__ = [
    "CSV_HEADER",
    "FIGURE_IDS",
    "Columns",
    "FigureInputError",
    "FigureSpec",
    "read_columns",
    "render",
    "spec_from_json",
    "sweep_label",
]

__version__ = "0.1.0"
