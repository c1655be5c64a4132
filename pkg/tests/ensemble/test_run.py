""" Test ensemble/config.py, ensemble/run.py, ensemble/verify.py """

import math

import numpy as np
import pydantic as pd
import pytest

from xorgames.ensemble import (
    EnsembleConfig, EnsembleStats, RATIO_LOWER, RATIO_UPPER,
    evaluate_samples, run_ensemble, summarize, figure1_series, verify_bounds, norm_factor,
)
from xorgames.game import sample_game, SampleDescriptor
from xorgames.value import entangled_value, classical_value


def test_config():
    """ Test: EnsembleConfig validation """
    cfg = EnsembleConfig(n=10, samples=5, master_seed=1)
    assert (cfg.tol, cfg.workers, cfg.classical, cfg.exhaustive) == (1e-9, 1, False, False)

    for kwargs in [
        dict(n=1, samples=5, master_seed=1),
        dict(n=1025, samples=5, master_seed=1),
        dict(n=10, samples=0, master_seed=1),
        dict(n=10, samples=5, master_seed=-1),
        dict(n=10, samples=5, master_seed=2 ** 64),
        dict(n=10, samples=5, master_seed=1, tol=0),
        dict(n=10, samples=5, master_seed=1, workers=0),
        dict(n=3, samples=5, master_seed=0, exhaustive=True),
        dict(n=13, samples=1 << 14, master_seed=0, exhaustive=True),
    ]:
        with pytest.raises(pd.ValidationError):
            EnsembleConfig(**kwargs)

    assert EnsembleConfig.exhaustive_for(3).samples == 16


def test_evaluate_exhaustive():
    """ Test: every game of n = 2, in enumeration order """
    result = evaluate_samples(EnsembleConfig.exhaustive_for(2, classical=True))
    assert len(result.values) == 8

    # 000 and 111 always win; 001 is CHSH
    assert result.values[0] == pytest.approx(1, abs=1e-9)
    assert result.values[7] == pytest.approx(1, abs=1e-9)
    assert result.values[4] == pytest.approx(1 / math.sqrt(2), abs=1e-9)
    assert result.classical[4] == 0.5

    # Complement i ↔ 7 − i
    assert result.values == pytest.approx(result.values[::-1], abs=1e-12)


def test_evaluate_sampled():
    """ Test: sampled runs are deterministic and do not depend on the number of workers """
    cfg = EnsembleConfig(n=12, samples=30, master_seed=99, classical=True)
    result = evaluate_samples(cfg)

    # Game i is the game sampled at (seed, i)
    for i in (0, 17, 29):
        g = sample_game(12, SampleDescriptor(master_seed=99, index=i))
        assert result.values[i] == entangled_value(g).midpoint
        assert result.classical[i] == classical_value(g).value

    # Workers
    parallel = evaluate_samples(cfg.model_copy(update={'workers': 3}))
    assert (parallel.values == result.values).all()
    assert run_ensemble(cfg) == run_ensemble(cfg.model_copy(update={'workers': 3}))

    # Classical ≤ entangled
    assert (result.classical <= result.values + 1e-9).all()

    # No classical values unless requested
    assert evaluate_samples(cfg.model_copy(update={'classical': False})).classical is None


def test_summarize():
    """ Test: summarize() """
    cfg = EnsembleConfig(n=16, samples=25, master_seed=5, classical=True)
    result = evaluate_samples(cfg)
    stats = summarize(result)

    ratios = result.values / norm_factor(16)
    assert stats.samples == 25
    assert stats.seed == 5
    assert stats.norm_factor == norm_factor(16)
    assert stats.mean_ratio == pytest.approx(ratios.mean(), rel=1e-14)
    assert stats.std_ratio == pytest.approx(ratios.std(ddof=1), rel=1e-12)
    assert stats.min_ratio == ratios.min()
    assert stats.max_ratio == ratios.max()
    assert stats.frac_in_bounds == np.mean((RATIO_LOWER <= ratios) & (ratios <= RATIO_UPPER))
    assert stats.mean_classical == pytest.approx(result.classical.mean(), rel=1e-14)
    assert stats.mean_gap >= 1 - 1e-9

    # A single sample
    stats = run_ensemble(EnsembleConfig(n=4, samples=1, master_seed=0))
    assert stats.std_ratio == 0
    assert stats.min_ratio == stats.mean_ratio == stats.max_ratio
    assert stats.mean_classical is None


def test_stats_validation():
    with pytest.raises(pd.ValidationError):
        EnsembleStats(n=2, samples=1, seed=0, norm_factor=0.5,
                      mean_ratio=2.0, std_ratio=0.0, min_ratio=0.0, max_ratio=1.0, frac_in_bounds=1.0)


def test_figure1_series():
    """ Test: one row per n, all with the same seed """
    rows = figure1_series([2, 8, 32], 10, 3)
    assert [row.n for row in rows] == [2, 8, 32]
    assert all(row.seed == 3 and row.samples == 10 for row in rows)
    assert rows[1] == run_ensemble(EnsembleConfig(n=8, samples=10, master_seed=3))


def test_verify_bounds():
    """ Test: verify_bounds() """
    # No claim at small n
    report = verify_bounds(2, 20, 0)
    assert report.threshold is None
    assert report.passed is None
    assert len(report.indicators) == 20
    assert report.fraction == sum(report.indicators) / 20
    assert report.fraction <= min(report.frac_lower, report.frac_upper)

    # Explicit thresholds
    assert verify_bounds(10, 10, 0, threshold=0.0).passed is True
    assert verify_bounds(10, 10, 0, threshold=1.01).passed is False

    # The default claim
    report = verify_bounds(50, 5, 0)
    assert report.threshold == 0.99


@pytest.mark.slow
def test_ensemble_acceptance():
    """ Test: the normalized mean is stable and inside the bounds for large n """
    for n in (64, 128, 256):
        stats = run_ensemble(EnsembleConfig(n=n, samples=500, master_seed=2024, workers=4))
        assert RATIO_LOWER <= stats.mean_ratio <= RATIO_UPPER
        assert stats.frac_in_bounds >= 0.99

    assert verify_bounds(100, 2000, 7, workers=4).passed


@pytest.mark.slow
def test_ensemble_n100():
    """ Test: 10⁴ samples at n = 100 give a normalized mean near 0.85 """
    stats = run_ensemble(EnsembleConfig(n=100, samples=10_000, master_seed=42, workers=4))
    assert stats.samples == 10_000
    assert 0.80 <= stats.mean_ratio <= 0.95


@pytest.mark.slow
def test_figure1_acceptance():
    """ Test: the normalized mean decays toward ≈ 0.85 """
    rows = figure1_series(range(10, 101, 10), 1000, 42, workers=4)
    assert rows[0].mean_ratio > rows[-1].mean_ratio
    assert 0.80 <= rows[-1].mean_ratio <= 0.95
