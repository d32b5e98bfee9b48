"""Figure construction: coverage curves, front-size curves, variant comparison.

Every figure puts the iteration index on the x-axis and counts on the y-axis.
Dashed horizontal reference lines mark the front size M (coverage figures) or
the population sizes N and 2N (front-size figures).  Colors follow the
Okabe-Ito palette, which stays distinguishable under common color-vision
deficiencies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from .reader import SchemaError, column, read_table

KINDS = ("coverage", "f1-pareto", "variant-comparison")

#: Okabe-Ito palette, skipping black (reserved for reference lines).
PALETTE = (
    "#E69F00",
    "#56B4E9",
    "#009E73",
    "#F0E442",
    "#0072B2",
    "#D55E00",
    "#CC79A7",
)

#: Logical columns each figure kind plots per input file.
_KIND_COLUMNS = {
    "coverage": ("covered_R", "covered_P_next"),
    "f1-pareto": ("f1_size", "pareto_individuals_P_next"),
    "variant-comparison": ("covered_R",),
}


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: input CSVs, figure kind, output path, reference values."""

    kind: str
    inputs: tuple[Path, ...]
    out: Path
    m_ref: int | None = None
    n_ref: int | None = None
    labels: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}, expected one of {KINDS}")
        if not self.inputs:
            raise ValueError("at least one input CSV is required")
        if self.labels and len(self.labels) != len(self.inputs):
            raise ValueError(
                f"{len(self.labels)} labels for {len(self.inputs)} inputs"
            )
        if self.kind in ("coverage", "variant-comparison") and self.m_ref is None:
            raise ValueError(f"the {self.kind} figure needs the front size (m_ref)")
        if self.kind == "f1-pareto" and self.n_ref is None:
            raise ValueError("the f1-pareto figure needs the population size (n_ref)")

    def label_for(self, index: int) -> str:
        if self.labels:
            return self.labels[index]
        path = Path(self.inputs[index])
        # aggregate.csv files are told apart by their directory name.
        if path.stem in ("aggregate", "replicate_000"):
            return path.parent.name
        return path.stem


_Y_LABELS = {
    "coverage": "Pareto-front values covered",
    "f1-pareto": "individuals",
    "variant-comparison": "Pareto-front values covered",
}


def build_figure(spec: PlotSpec) -> Figure:
    """The fully laid-out figure for a plot specification (not yet saved)."""
    pair = _KIND_COLUMNS[spec.kind]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for i, path in enumerate(spec.inputs):
        table = read_table(path)
        x = column(table, "iteration", path)
        color = PALETTE[i % len(PALETTE)]
        label = spec.label_for(i)
        for j, name in enumerate(pair):
            y = column(table, name, path)
            ax.plot(
                x,
                y,
                color=color,
                linestyle="-" if j == 0 else ":",
                linewidth=1.6 if j == 0 else 1.2,
                label=f"{label}: {name}" if len(pair) > 1 else label,
            )

    if spec.kind in ("coverage", "variant-comparison"):
        ax.axhline(spec.m_ref, color="black", linestyle="--", linewidth=1.0,
                   label=f"front size M = {spec.m_ref}")
    else:
        ax.axhline(spec.n_ref, color="black", linestyle="--", linewidth=1.0,
                   label=f"N = {spec.n_ref}")
        ax.axhline(2 * spec.n_ref, color="black", linestyle="--", linewidth=0.8,
                   label=f"2N = {2 * spec.n_ref}")

    ax.set_xlabel("iteration")
    ax.set_ylabel(_Y_LABELS[spec.kind])
    ax.set_ylim(bottom=0)
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    return fig


def render(spec: PlotSpec) -> Path:
    """Validate inputs, draw the figure, and write the image file.

    All inputs are read before anything is written, so a schema error never
    leaves a partial image behind.  The output format follows the file
    extension (``.svg`` recommended).
    """
    fig = build_figure(spec)
    out = Path(spec.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    try:
        fig.savefig(out)
    finally:
        plt.close(fig)
    return out
