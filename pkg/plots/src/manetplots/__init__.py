"""Batch figure rendering over the simulator's CSV artifacts.

Every figure is a pure view of CSV values: nothing is recomputed here.  One
module per figure family; render_all walks a results tree and invokes them.
"""

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "manetplots"

__version__ = "0.1.0"
