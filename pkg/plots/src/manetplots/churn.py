"""Link-dynamics family: changes per node per second vs network size,
one line per group (speed variant) from churn_curve.csv."""

from __future__ import annotations

import sys
from pathlib import Path

import matplotlib.pyplot as plt

from manetplots.figspec import FigureSpec, placeholder, read_csv, save


def build(spec: FigureSpec):
    spec.validate()
    cols = read_csv(spec.inputs["churn"], ["group", "n", "changes_per_node_per_sec"])
    series: dict[str, tuple[list, list]] = {}
    for i in range(len(cols["group"])):
        g = cols["group"][i]
        series.setdefault(g, ([], []))
        series[g][0].append(float(cols["n"][i]))
        series[g][1].append(float(cols["changes_per_node_per_sec"][i]))
    if not series:
        return None, series
    fig, ax = plt.subplots(figsize=(6, 4))
    for g in sorted(series):
        ax.plot(*series[g], "o-", label=g)
    ax.set_xlabel(spec.xlabel or "network size (nodes)")
    ax.set_ylabel(spec.ylabel or "link changes / node / s")
    ax.set_ylim(bottom=0)
    ax.set_title(spec.title)
    ax.legend(fontsize=7)
    return fig, series


def render(spec: FigureSpec) -> list[Path]:
    fig, _ = build(spec)
    if fig is None:
        return placeholder(spec, "no data")
    return save(fig, spec.output)


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) != 2:
        print("usage: churn.py <churn_curve.csv> <output-stem>", file=sys.stderr)
        return 2
    spec = FigureSpec(family="churn", inputs={"churn": Path(argv[0])}, output=Path(argv[1]))
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
