"""Reachability time-series family: fraction of reachable pairs over a run."""

from __future__ import annotations

import sys
from pathlib import Path

import matplotlib.pyplot as plt

from manetplots.figspec import FigureSpec, floats, placeholder, read_csv, save


def build(spec: FigureSpec):
    spec.validate()
    cols = read_csv(spec.inputs["reachability"], ["t", "reachable_fraction"])
    ts = floats(cols, "t")
    fracs = floats(cols, "reachable_fraction")
    data = {"t": ts, "reachable_fraction": fracs}
    if not ts:
        return None, data
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.plot(ts, fracs, linewidth=0.8)
    ax.set_xlabel(spec.xlabel or "time (s)")
    ax.set_ylabel(spec.ylabel or "reachable fraction")
    ax.set_ylim(0, 1.02)
    ax.set_title(spec.title)
    return fig, data


def render(spec: FigureSpec) -> list[Path]:
    fig, _ = build(spec)
    if fig is None:
        return placeholder(spec, "no data")
    return save(fig, spec.output)


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) != 2:
        print("usage: timeseries.py <reachability.csv> <output-stem>", file=sys.stderr)
        return 2
    spec = FigureSpec(
        family="timeseries", inputs={"reachability": Path(argv[0])}, output=Path(argv[1])
    )
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
