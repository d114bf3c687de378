"""Reachability-vs-parameter family: grouped bars of mean reachability,
one bar per (group, n) row selected from reach_curve.csv."""

from __future__ import annotations

import sys
from pathlib import Path

import matplotlib.pyplot as plt

from manetplots.figspec import FigureSpec, placeholder, read_csv, save


def build(spec: FigureSpec):
    spec.validate()
    cols = read_csv(spec.inputs["reach"], ["group", "n", "mean_reachability"])
    want_n = spec.options.get("n")
    groups = spec.options.get("groups")
    labels, values = [], []
    for i in range(len(cols["group"])):
        if want_n is not None and int(cols["n"][i]) != int(want_n):
            continue
        if groups is not None and cols["group"][i] not in groups:
            continue
        labels.append(f"{cols['group'][i]} (n={cols['n'][i]})")
        values.append(float(cols["mean_reachability"][i]))
    data = {"labels": labels, "values": values}
    if not labels:
        return None, data
    fig, ax = plt.subplots(figsize=(max(6, 1.2 * len(labels)), 4))
    ax.bar(range(len(labels)), values, edgecolor="black", linewidth=0.4)
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    ax.set_ylim(0, 1.0)
    ax.set_ylabel(spec.ylabel or "mean reachable fraction")
    ax.set_title(spec.title)
    fig.tight_layout()
    return fig, data


def render(spec: FigureSpec) -> list[Path]:
    fig, _ = build(spec)
    if fig is None:
        return placeholder(spec, "no data")
    return save(fig, spec.output)


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) != 2:
        print("usage: reach.py <reach_curve.csv> <output-stem>", file=sys.stderr)
        return 2
    spec = FigureSpec(family="reach", inputs={"reach": Path(argv[0])}, output=Path(argv[1]))
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
