"""Scaling-curve family: median and mean vs network size for one group+kind,
optionally on log-log axes with the fitted power law overlaid."""

from __future__ import annotations

import math
import sys
from pathlib import Path

import matplotlib.pyplot as plt

from manetplots.figspec import FigureSpec, SchemaError, floats, placeholder, read_csv, save


def _select(cols, group, kind):
    idx = [
        i
        for i in range(len(cols["group"]))
        if cols["group"][i] == group and cols["kind"][i] == kind
    ]
    return idx


def build(spec: FigureSpec):
    spec.validate()
    group = spec.options["group"]
    kind = spec.options["kind"]
    cols = read_csv(spec.inputs["curves"], ["group", "kind", "n", "median_s", "mean_s"])
    idx = _select(cols, group, kind)
    ns = [float(cols["n"][i]) for i in idx]
    med = [float(cols["median_s"][i]) for i in idx]
    mean = [float(cols["mean_s"][i]) for i in idx]
    data = {"n": ns, "median": med, "mean": mean, "fit": None}
    if not ns:
        return None, data

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, med, "o-", label="median")
    ax.plot(ns, mean, "s--", label="mean")
    if spec.loglog:
        ax.set_xscale("log")
        ax.set_yscale("log")
    if "fits" in spec.inputs and Path(spec.inputs["fits"]).exists():
        fcols = read_csv(spec.inputs["fits"], ["group", "kind", "slope", "intercept"])
        for i in range(len(fcols["group"])):
            if fcols["group"][i] == group and fcols["kind"][i] == f"{kind}_median":
                slope = float(fcols["slope"][i])
                intercept = float(fcols["intercept"][i])
                ys = [math.exp(intercept + slope * math.log(n)) for n in ns]
                ax.plot(ns, ys, ":", color="gray",
                        label=f"fit slope {slope:.2f}")
                data["fit"] = (slope, intercept)
    ax.set_xlabel(spec.xlabel or "network size (nodes)")
    ax.set_ylabel(spec.ylabel or f"{kind} interval (s)")
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
        print("usage: curves.py <curves.csv> <group> <kind> <output-stem>", file=sys.stderr)
        return 2
    spec = FigureSpec(
        family="curves",
        inputs={"curves": Path(argv[0])},
        output=Path(argv[3]),
        loglog=True,
        options={"group": argv[1], "kind": argv[2]},
    )
    for path in render(spec):
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
