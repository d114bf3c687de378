"""Manifest runner: walk a results tree and render every figure family.

Usage: render_all <results-dir> <out-dir>

Two kinds of inputs are discovered:
  * run directories (holding interval_freq.csv): histogram, CDF and
    reachability-time-series figures, one set per run;
  * an analysis directory (holding curves.csv, either at the root or under
    analysis/): scaling-curve, wall, reachability-vs-parameter and churn
    figures, one per group.
"""

from __future__ import annotations

import sys
import traceback
from pathlib import Path

from manetplots import cdf, churn, curves, histograms, reach, timeseries, wall
from manetplots.figspec import FigureSpec, placeholder, read_csv


class _PlaceholderFamily:
    """Stands in when an analysis CSV exists but carries no rows."""

    @staticmethod
    def render(spec: FigureSpec):
        return placeholder(spec, spec.options.get("message", "no data"))


def _slug(text: str) -> str:
    out = []
    for ch in text:
        out.append(ch if ch.isalnum() or ch in "-_." else "_")
    return "".join(out)


def run_dir_specs(run_dir: Path, results_root: Path, out_root: Path) -> list:
    rel = run_dir.relative_to(results_root)
    stem = out_root / "runs" / rel
    name = _slug(str(rel))
    specs = []
    for kind in ("connectivity", "repair"):
        hist = run_dir / f"histogram_{kind}.csv"
        if hist.exists():
            specs.append(
                (
                    histograms,
                    FigureSpec(
                        family="histogram",
                        inputs={"histogram": hist},
                        output=stem / f"histogram_{kind}",
                        title=f"{kind} intervals: {name}",
                    ),
                )
            )
        cdf_file = run_dir / f"cdf_{kind}.csv"
        if cdf_file.exists():
            specs.append(
                (
                    cdf,
                    FigureSpec(
                        family="cdf",
                        inputs={kind: cdf_file},
                        output=stem / f"cdf_{kind}",
                        title=f"{kind} interval CDF: {name}",
                    ),
                )
            )
    series = run_dir / "reachability.csv"
    if series.exists():
        specs.append(
            (
                timeseries,
                FigureSpec(
                    family="timeseries",
                    inputs={"reachability": series},
                    output=stem / "reachability",
                    title=f"reachable paths over time: {name}",
                ),
            )
        )
    return specs


def analysis_specs(analysis_dir: Path, out_root: Path) -> list:
    specs = []
    curves_csv = analysis_dir / "curves.csv"
    wall_csv = analysis_dir / "wall.csv"
    fits_csv = analysis_dir / "fits.csv"
    groups: list[str] = []
    cols = read_csv(curves_csv, ["group", "kind", "n", "median_s", "mean_s"])
    for g in cols["group"]:
        if g not in groups:
            groups.append(g)
    if not groups:
        return [
            (
                _PlaceholderFamily,
                FigureSpec(
                    family="curves",
                    inputs={},
                    output=out_root / "analysis" / "no_data",
                    title="scaling curves",
                    options={"message": "no data in curves.csv"},
                ),
            )
        ]
    for group in groups:
        gslug = _slug(group)
        for kind in ("connectivity", "repair"):
            specs.append(
                (
                    curves,
                    FigureSpec(
                        family="curves",
                        inputs={"curves": curves_csv, "fits": fits_csv},
                        output=out_root / "analysis" / f"curves_{kind}_{gslug}",
                        title=f"{kind} intervals vs size: {group}",
                        loglog=True,
                        options={"group": group, "kind": kind},
                    ),
                )
            )
        if wall_csv.exists():
            specs.append(
                (
                    wall,
                    FigureSpec(
                        family="wall",
                        inputs={"curves": curves_csv, "wall": wall_csv},
                        output=out_root / "analysis" / f"wall_{gslug}",
                        title=f"repair-time scaling wall: {group}",
                        options={"group": group},
                    ),
                )
            )
    reach_csv = analysis_dir / "reach_curve.csv"
    if reach_csv.exists():
        specs.append(
            (
                reach,
                FigureSpec(
                    family="reach",
                    inputs={"reach": reach_csv},
                    output=out_root / "analysis" / "reachability_by_config",
                    title="mean reachability by configuration",
                ),
            )
        )
    churn_csv = analysis_dir / "churn_curve.csv"
    if churn_csv.exists():
        specs.append(
            (
                churn,
                FigureSpec(
                    family="churn",
                    inputs={"churn": churn_csv},
                    output=out_root / "analysis" / "link_dynamics",
                    title="link dynamics vs size",
                ),
            )
        )
    return specs


def collect_specs(results_root: Path, out_root: Path) -> list:
    specs = []
    for candidate in (results_root, results_root / "analysis"):
        if (candidate / "curves.csv").exists():
            specs.extend(analysis_specs(candidate, out_root))
            break
    for freq in sorted(results_root.rglob("interval_freq.csv")):
        specs.extend(run_dir_specs(freq.parent, results_root, out_root))
    return specs


def main(argv=None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    if len(argv) != 2:
        print("usage: render_all <results-dir> <out-dir>", file=sys.stderr)
        return 2
    results_root = Path(argv[0])
    out_root = Path(argv[1])
    if not results_root.exists():
        print(f"error: no such results directory: {results_root}", file=sys.stderr)
        return 1
    try:
        specs = collect_specs(results_root, out_root)
    except Exception as exc:
        print(f"error scanning {results_root}: {exc}", file=sys.stderr)
        return 1
    if not specs:
        print(f"error: nothing to render under {results_root}", file=sys.stderr)
        return 1
    failures = 0
    rendered = 0
    for module, spec in specs:
        try:
            paths = module.render(spec)
            rendered += len(paths)
        except Exception as exc:
            failures += 1
            print(f"error rendering {spec.family} -> {spec.output}: {exc}", file=sys.stderr)
            if "-v" in sys.argv:
                traceback.print_exc()
    print(f"rendered {rendered} files from {len(specs)} figures ({failures} failures)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
