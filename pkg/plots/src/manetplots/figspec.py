"""Figure specifications and strict CSV schema handling."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib.pyplot as plt


class SchemaError(ValueError):
    """A CSV did not match its documented schema; names the offending column."""


@dataclass
class FigureSpec:
    family: str
    inputs: dict[str, Path]
    output: Path  # extensionless stem; .png and .svg are produced
    title: str = ""
    xlabel: str = ""
    ylabel: str = ""
    loglog: bool = False
    options: dict = field(default_factory=dict)

    def validate(self) -> None:
        for name, path in self.inputs.items():
            if not Path(path).exists():
                raise SchemaError(f"{self.family}: missing input CSV {name}: {path}")


def read_csv(path: str | Path, required: list[str]) -> dict[str, list[str]]:
    """Load columns, insisting on the documented header."""
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected header {required}")
        for col in required:
            if col not in header:
                raise SchemaError(f"{path}: missing column '{col}' (header: {header})")
        cols: dict[str, list[str]] = {name: [] for name in header}
        for row in reader:
            if not row:
                continue
            if len(row) != len(header):
                raise SchemaError(f"{path}: row width {len(row)} != header {len(header)}")
            for name, value in zip(header, row):
                cols[name].append(value)
    return cols


def floats(cols: dict[str, list[str]], name: str) -> list[float]:
    try:
        return [float(v) for v in cols[name]]
    except ValueError as exc:
        raise SchemaError(f"column '{name}' is not numeric: {exc}") from exc


def save(fig, output: Path) -> list[Path]:
    """Write PNG and SVG deterministically; returns the paths."""
    output = Path(output)
    output.parent.mkdir(parents=True, exist_ok=True)
    # Plain concatenation: figure stems may contain dots (e.g. "B=0.5").
    png = output.parent / (output.name + ".png")
    svg = output.parent / (output.name + ".svg")
    fig.savefig(png, dpi=110, metadata={"Software": "manetplots"})
    fig.savefig(svg, metadata={"Date": None})
    plt.close(fig)
    return [png, svg]


def placeholder(spec: FigureSpec, message: str) -> list[Path]:
    """Explicit "no data" image for degenerate inputs."""
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.text(0.5, 0.5, message, ha="center", va="center", fontsize=12)
    ax.set_axis_off()
    ax.set_title(spec.title or spec.family)
    return save(fig, spec.output)
