"""Wall-chart family: connectivity and repair medians vs size on log-log
axes with a vertical marker at the crossing from wall.csv."""

from __future__ import annotations

import sys
from pathlib import Path

import matplotlib.pyplot as plt

from manetplots.figspec import FigureSpec, floats, placeholder, read_csv, save


def build(spec: FigureSpec):
    spec.validate()
    group = spec.options["group"]
    cols = read_csv(spec.inputs["curves"], ["group", "kind", "n", "median_s"])
    series = {"connectivity": ([], []), "repair": ([], [])}
    for i in range(len(cols["group"])):
        kind = cols["kind"][i]
        if cols["group"][i] == group and kind in series:
            series[kind][0].append(float(cols["n"][i]))
            series[kind][1].append(float(cols["median_s"][i]))
    wcols = read_csv(spec.inputs["wall"], ["group", "n_star", "method", "extrapolated"])
    n_star = None
    extrapolated = False
    for i in range(len(wcols["group"])):
        if wcols["group"][i] == group:
            n_star = float(wcols["n_star"][i])
            extrapolated = wcols["extrapolated"][i] == "1"
    data = {"series": series, "n_star": n_star, "extrapolated": extrapolated}
    if not series["connectivity"][0]:
        return None, data

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(*series["connectivity"], "o-", label="connectivity median")
    ax.plot(*series["repair"], "s-", label="repair median")
    ax.set_xscale("log")
    ax.set_yscale("log")
    if n_star is not None:
        style = {"linestyle": ":", "color": "red"} if extrapolated else {
            "linestyle": "--", "color": "red"}
        label = f"wall n*={n_star:.0f}" + (" (extrapolated)" if extrapolated else "")
        ax.axvline(n_star, label=label, **style)
    ax.set_xlabel(spec.xlabel or "network size (nodes)")
    ax.set_ylabel(spec.ylabel or "median interval (s)")
    ax.set_title(spec.title or group)
    ax.legend(fontsize=8)
    return fig, data


def render(spec: FigureSpec) -> list[Path]:
    fig, _ = build(spec)
    if fig is None:
        return placeholder(spec, "no data")
    return save(fig, spec.output)


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) != 4:
        print("usage: wall.py <curves.csv> <wall.csv> <group> <output-stem>",
              file=sys.stderr)
        return 2
    spec = FigureSpec(
        family="wall",
        inputs={"curves": Path(argv[0]), "wall": Path(argv[1])},
        output=Path(argv[3]),
        options={"group": argv[2]},
    )
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
