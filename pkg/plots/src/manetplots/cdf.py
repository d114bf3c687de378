"""Empirical CDF family: one line per input CSV, overlaid."""

from __future__ import annotations

import sys
from pathlib import Path

import matplotlib.pyplot as plt

from manetplots.figspec import FigureSpec, floats, placeholder, read_csv, save


def build(spec: FigureSpec):
    spec.validate()
    series = {}
    for label, path in sorted(spec.inputs.items()):
        cols = read_csv(path, ["length_s", "cum_fraction"])
        series[label] = (floats(cols, "length_s"), floats(cols, "cum_fraction"))
    if all(len(xs) == 0 for xs, _ in series.values()):
        return None, series
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, (xs, ys) in series.items():
        if xs:
            ax.step(xs, ys, where="post", label=label)
    ax.set_xlabel(spec.xlabel or "interval length (s)")
    ax.set_ylabel(spec.ylabel or "cumulative fraction")
    ax.set_ylim(0, 1.02)
    ax.set_title(spec.title)
    if len(series) > 1:
        ax.legend(fontsize=8)
    return fig, series


def render(spec: FigureSpec) -> list[Path]:
    fig, _ = build(spec)
    if fig is None:
        return placeholder(spec, "no data")
    return save(fig, spec.output)


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) < 2:
        print("usage: cdf.py <cdf.csv> [<cdf.csv> ...] <output-stem>", file=sys.stderr)
        return 2
    inputs = {Path(p).parent.name or Path(p).stem: Path(p) for p in argv[:-1]}
    spec = FigureSpec(family="cdf", inputs=inputs, output=Path(argv[-1]))
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
