"""Interval histogram family: normalized bar chart of one histogram CSV."""

from __future__ import annotations

import sys
from pathlib import Path

import matplotlib.pyplot as plt

from manetplots.figspec import FigureSpec, floats, placeholder, read_csv, save


def build(spec: FigureSpec):
    spec.validate()
    cols = read_csv(spec.inputs["histogram"], ["bin_start_s", "normalized_count"])
    starts = floats(cols, "bin_start_s")
    counts = floats(cols, "normalized_count")
    if not starts:
        return None, {"bin_start_s": [], "normalized_count": []}
    width = starts[1] - starts[0] if len(starts) > 1 else 0.5
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(starts, counts, width=width, align="edge", edgecolor="black", linewidth=0.4)
    ax.set_xlabel(spec.xlabel or "interval length (s)")
    ax.set_ylabel(spec.ylabel or "fraction of instances")
    ax.set_title(spec.title)
    return fig, {"bin_start_s": starts, "normalized_count": counts}


def render(spec: FigureSpec) -> list[Path]:
    fig, _ = build(spec)
    if fig is None:
        return placeholder(spec, "no data")
    return save(fig, spec.output)


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) != 2:
        print("usage: histograms.py <histogram.csv> <output-stem>", file=sys.stderr)
        return 2
    spec = FigureSpec(
        family="histogram",
        inputs={"histogram": Path(argv[0])},
        output=Path(argv[1]),
        title=Path(argv[0]).stem,
    )
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
