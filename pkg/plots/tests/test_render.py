import hashlib
from pathlib import Path

import pytest

from manetplots import cdf, churn, curves, histograms, reach, timeseries, wall
from manetplots.figspec import FigureSpec, SchemaError, read_csv
from manetplots.render_all import collect_specs, main as render_all_main


HIST = "bin_start_s,normalized_count\n0.00,0.25\n0.50,0.5\n1.00,0.25\n"
CDF = "length_s,cum_fraction\n0.05,0.1\n0.50,0.6\n2.00,1.0\n"
REACH_TS = "t,reachable_fraction\n10.00,0.5\n10.05,0.75\n10.10,1.0\n"
FREQ = "kind,length_s,count\nconnectivity,0.50,2\nrepair,1.55,1\n"
CURVES = (
    "group,kind,n,median_s,mean_s,count\n"
    "lsr|B=0.5|random_walk|v=2-4,connectivity,50,3.85,5.5,1000\n"
    "lsr|B=0.5|random_walk|v=2-4,connectivity,100,2.1,3.8,1500\n"
    "lsr|B=0.5|random_walk|v=2-4,connectivity,400,1.05,1.9,2500\n"
    "lsr|B=0.5|random_walk|v=2-4,repair,50,1.55,1.4,1000\n"
    "lsr|B=0.5|random_walk|v=2-4,repair,100,1.55,1.6,1500\n"
    "lsr|B=0.5|random_walk|v=2-4,repair,400,1.65,1.8,2500\n"
)
FITS = (
    "group,kind,slope,intercept,r2,points\n"
    "lsr|B=0.5|random_walk|v=2-4,connectivity_median,-0.6,3.6,0.97,4\n"
)
WALL = (
    "group,n_star,method,extrapolated\n"
    "lsr|B=0.5|random_walk|v=2-4,183,segment_intersection,0\n"
)
REACH_CURVE = (
    "group,n,mean_reachability,runs\n"
    "lsr|B=0.5|random_walk|v=2-4,100,0.71,3\n"
    "lsr|B=1|random_walk|v=2-4,100,0.53,3\n"
)
CHURN_CURVE = (
    "group,n,changes_per_node_per_sec,runs\n"
    "lsr|B=0.5|random_walk|v=2-4,50,0.28,3\n"
    "lsr|B=0.5|random_walk|v=2-4,100,0.33,3\n"
)

GROUP = "lsr|B=0.5|random_walk|v=2-4"


@pytest.fixture
def tree(tmp_path):
    """Synthetic results tree matching the documented CSV schemas."""
    run = tmp_path / "results" / "lsr_B0.5" / "n=100" / "seed=1"
    run.mkdir(parents=True)
    (run / "interval_freq.csv").write_text(FREQ)
    (run / "histogram_connectivity.csv").write_text(HIST)
    (run / "histogram_repair.csv").write_text(HIST)
    (run / "cdf_connectivity.csv").write_text(CDF)
    (run / "cdf_repair.csv").write_text(CDF)
    (run / "reachability.csv").write_text(REACH_TS)
    analysis = tmp_path / "results" / "analysis"
    analysis.mkdir()
    (analysis / "curves.csv").write_text(CURVES)
    (analysis / "fits.csv").write_text(FITS)
    (analysis / "wall.csv").write_text(WALL)
    (analysis / "reach_curve.csv").write_text(REACH_CURVE)
    (analysis / "churn_curve.csv").write_text(CHURN_CURVE)
    return tmp_path / "results"


def test_histogram_bars_equal_csv_values(tree, tmp_path):
    spec = FigureSpec(
        family="histogram",
        inputs={"histogram": tree / "lsr_B0.5/n=100/seed=1/histogram_connectivity.csv"},
        output=tmp_path / "h",
    )
    fig, data = histograms.build(spec)
    ax = fig.axes[0]
    heights = [p.get_height() for p in ax.patches]
    assert heights == [0.25, 0.5, 0.25]
    assert [p.get_x() for p in ax.patches] == [0.0, 0.5, 1.0]
    assert sum(heights) == pytest.approx(1.0)


def test_cdf_line_equals_csv_values(tree, tmp_path):
    spec = FigureSpec(
        family="cdf",
        inputs={"connectivity": tree / "lsr_B0.5/n=100/seed=1/cdf_connectivity.csv"},
        output=tmp_path / "c",
    )
    fig, series = cdf.build(spec)
    xs, ys = series["connectivity"]
    assert xs == [0.05, 0.5, 2.0]
    assert ys == [0.1, 0.6, 1.0]
    line = fig.axes[0].lines[0]
    assert list(line.get_ydata()) == ys


def test_curves_series_and_fit_from_csv(tree, tmp_path):
    spec = FigureSpec(
        family="curves",
        inputs={"curves": tree / "analysis/curves.csv", "fits": tree / "analysis/fits.csv"},
        output=tmp_path / "c",
        loglog=True,
        options={"group": GROUP, "kind": "connectivity"},
    )
    fig, data = curves.build(spec)
    assert data["n"] == [50.0, 100.0, 400.0]
    assert data["median"] == [3.85, 2.1, 1.05]
    assert data["mean"] == [5.5, 3.8, 1.9]
    assert data["fit"] == (-0.6, 3.6)
    med_line = fig.axes[0].lines[0]
    assert list(med_line.get_ydata()) == data["median"]


def test_wall_marker_at_n_star(tree, tmp_path):
    spec = FigureSpec(
        family="wall",
        inputs={"curves": tree / "analysis/curves.csv", "wall": tree / "analysis/wall.csv"},
        output=tmp_path / "w",
        options={"group": GROUP},
    )
    fig, data = wall.build(spec)
    assert data["n_star"] == 183.0
    ax = fig.axes[0]
    vlines = [l for l in ax.lines if list(l.get_xdata()) == [183.0, 183.0]]
    assert vlines, "no vertical marker at n_star"


def test_reach_bars_equal_csv(tree, tmp_path):
    spec = FigureSpec(
        family="reach",
        inputs={"reach": tree / "analysis/reach_curve.csv"},
        output=tmp_path / "r",
    )
    fig, data = reach.build(spec)
    assert data["values"] == [0.71, 0.53]
    heights = [p.get_height() for p in fig.axes[0].patches]
    assert heights == [0.71, 0.53]


def test_churn_series_equal_csv(tree, tmp_path):
    spec = FigureSpec(
        family="churn",
        inputs={"churn": tree / "analysis/churn_curve.csv"},
        output=tmp_path / "ch",
    )
    fig, series = churn.build(spec)
    assert series[GROUP] == ([50.0, 100.0], [0.28, 0.33])


def test_timeseries_equal_csv(tree, tmp_path):
    spec = FigureSpec(
        family="timeseries",
        inputs={"reachability": tree / "lsr_B0.5/n=100/seed=1/reachability.csv"},
        output=tmp_path / "t",
    )
    fig, data = timeseries.build(spec)
    assert data["t"] == [10.0, 10.05, 10.1]
    assert data["reachable_fraction"] == [0.5, 0.75, 1.0]


def test_schema_mismatch_names_offending_column(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("bin_start_s,count\n0.0,1\n")
    spec = FigureSpec(
        family="histogram", inputs={"histogram": bad}, output=tmp_path / "x"
    )
    with pytest.raises(SchemaError, match="normalized_count"):
        histograms.build(spec)


def test_missing_input_reported(tmp_path):
    spec = FigureSpec(
        family="histogram",
        inputs={"histogram": tmp_path / "nope.csv"},
        output=tmp_path / "x",
    )
    with pytest.raises(SchemaError, match="missing input"):
        histograms.render(spec)


def test_empty_histogram_renders_placeholder(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("bin_start_s,normalized_count\n")
    spec = FigureSpec(
        family="histogram", inputs={"histogram": empty}, output=tmp_path / "p"
    )
    paths = histograms.render(spec)
    assert [p.suffix for p in paths] == [".png", ".svg"]
    for p in paths:
        assert p.exists() and p.stat().st_size > 0


def test_render_all_over_tree(tree, tmp_path, capsys):
    out = tmp_path / "figs"
    rc = render_all_main([str(tree), str(out)])
    assert rc == 0
    produced = sorted(p.relative_to(out).as_posix() for p in out.rglob("*.png"))
    assert "analysis/wall_lsr_B_0.5_random_walk_v_2-4.png" in produced
    assert "analysis/curves_connectivity_lsr_B_0.5_random_walk_v_2-4.png" in produced
    assert "analysis/reachability_by_config.png" in produced
    assert "analysis/link_dynamics.png" in produced
    assert any("histogram_connectivity" in p for p in produced)
    assert any("reachability" in p for p in produced)
    for png in out.rglob("*.png"):
        assert png.with_suffix(".svg").exists()


def test_render_all_missing_dir_errors(tmp_path, capsys):
    rc = render_all_main([str(tmp_path / "nope"), str(tmp_path / "out")])
    assert rc == 1


def test_render_all_empty_curves_is_not_an_error(tmp_path):
    results = tmp_path / "results"
    (results / "analysis").mkdir(parents=True)
    (results / "analysis" / "curves.csv").write_text("group,kind,n,median_s,mean_s,count\n")
    run = results / "run1"
    run.mkdir()
    (run / "interval_freq.csv").write_text(FREQ)
    (run / "histogram_connectivity.csv").write_text(HIST)
    rc = render_all_main([str(results), str(tmp_path / "out")])
    assert rc == 0
    assert (tmp_path / "out" / "analysis" / "no_data.png").exists()


def test_rendering_is_deterministic(tree, tmp_path):
    spec1 = FigureSpec(
        family="histogram",
        inputs={"histogram": tree / "lsr_B0.5/n=100/seed=1/histogram_connectivity.csv"},
        output=tmp_path / "d1",
        title="same",
    )
    spec2 = FigureSpec(
        family="histogram",
        inputs={"histogram": tree / "lsr_B0.5/n=100/seed=1/histogram_connectivity.csv"},
        output=tmp_path / "d2",
        title="same",
    )
    paths1 = histograms.render(spec1)
    paths2 = histograms.render(spec2)
    for a, b in zip(paths1, paths2):
        da = hashlib.sha256(a.read_bytes()).hexdigest()
        db = hashlib.sha256(b.read_bytes()).hexdigest()
        assert da == db, (a, b)


def test_family_scripts_run_standalone(tree, tmp_path, capsys):
    rc = histograms.main([
        str(tree / "lsr_B0.5/n=100/seed=1/histogram_connectivity.csv"),
        str(tmp_path / "solo"),
    ])
    assert rc == 0
    assert (tmp_path / "solo.png").exists()
    assert histograms.main([]) == 2
