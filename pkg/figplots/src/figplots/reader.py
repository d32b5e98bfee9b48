"""Reading of experiment CSV logs.

Two file flavors share the same shape: per-replicate logs
(``iteration,covered_R,...``) and aggregate logs whose statistic columns are
prefixed with ``median_``.  Columns are looked up by their logical name, so
``covered_R`` finds ``median_covered_R`` in an aggregate file.
"""

from __future__ import annotations

import csv
from pathlib import Path


class SchemaError(ValueError):
    """A CSV file does not provide what a figure needs."""


def read_table(path: str | Path) -> dict[str, list[float]]:
    """Parse one CSV into named numeric columns.

    Raises :class:`SchemaError` for files without a header, with an empty
    body, or with rows that do not match the header width.
    """
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows:
        raise SchemaError(f"{path}: file is empty")
    header = [name.strip() for name in rows[0]]
    if "iteration" not in header:
        raise SchemaError(f"{path}: missing column 'iteration' in header")
    if len(rows) == 1:
        raise SchemaError(f"{path}: no data rows")
    table: dict[str, list[float]] = {name: [] for name in header}
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise SchemaError(
                f"{path}:{number}: expected {len(header)} fields, got {len(row)}"
            )
        for name, cell in zip(header, row):
            try:
                table[name].append(float(cell))
            except ValueError as e:
                raise SchemaError(f"{path}:{number}: non-numeric value in {name!r}") from e
    return table


def column(table: dict[str, list[float]], name: str, path: str | Path) -> list[float]:
    """A logical column: exact name first, then its ``median_`` variant."""
    if name in table:
        return table[name]
    if f"median_{name}" in table:
        return table[f"median_{name}"]
    raise SchemaError(f"{path}: missing column {name!r}")
