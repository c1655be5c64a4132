""" Monte Carlo ensembles over random games: statistics, bound verification, CSV and plot output """

from xorgames.combinatorics import norm_factor
from .config import EnsembleConfig
from .run import EnsembleStats, SampleValues, RATIO_LOWER, RATIO_UPPER, evaluate_samples, run_ensemble, summarize, figure1_series
from .verify import BoundsReport, verify_bounds
from .csvfile import COLUMNS, stats_frame, write_stats_csv, read_stats_csv
from .plot import emit_plot_script
