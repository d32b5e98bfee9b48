"""Figures from experiment CSV logs: coverage curves, front-size curves,
variant comparisons, with dashed reference lines for the front and population
sizes."""

from .figures import KINDS, PALETTE, PlotSpec, build_figure, render
from .reader import SchemaError, column, read_table

__all__ = [
    "KINDS",
    "PALETTE",
    "PlotSpec",
    "SchemaError",
    "build_figure",
    "column",
    "read_table",
    "render",
]

__version__ = "0.1.0"
