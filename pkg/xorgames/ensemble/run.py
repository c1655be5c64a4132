""" Monte Carlo ensembles of random games

Every game gets its entangled value (the enclosure midpoint) and, optionally, its classical value.
The ratio value / norm_factor(n) is the quantity whose mean tends to a constant:
with probability → 1 it lies between C1 = 1/(4√3) and 2·C2 = 4.

Per-sample results are stored by index and reduced in index order,
so the statistics do not depend on the number of workers.
"""

from __future__ import annotations

import logging
import math
from collections import abc
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pydantic as pd

from xorgames.bench.rademacher import C1, C2
from xorgames.combinatorics import norm_factor
from xorgames.config import settings
from xorgames.game import SymmetricGame, sample_bit_matrix, enumerate_bit_matrix
from xorgames.tools.python.pool import parallel_map, chunked_ranges
from xorgames.value import entangled_value, classical_value
from .config import EnsembleConfig


logger = logging.getLogger(__name__)

# Bounds on value / norm_factor(n)
RATIO_LOWER = C1
RATIO_UPPER = 2 * C2


class EnsembleStats(pd.BaseModel):
    """ Aggregated statistics of one run: one row of the CSV file """
    model_config = pd.ConfigDict(frozen=True)

    n: int = pd.Field(ge=2)
    samples: int = pd.Field(ge=1)
    seed: int = pd.Field(ge=0)

    # √(R_n ln n) / 2^n
    norm_factor: float = pd.Field(gt=0)

    # value / norm_factor
    mean_ratio: float
    std_ratio: float = pd.Field(ge=0)
    min_ratio: float
    max_ratio: float

    # Fraction of the games with C1 ≤ ratio ≤ 2·C2
    frac_in_bounds: float = pd.Field(ge=0, le=1)

    # Only with classical values: the mean classical value, and the mean of entangled/classical
    mean_classical: Optional[float] = None
    mean_gap: Optional[float] = None

    @pd.model_validator(mode='after')
    def _check_order(self):
        assert self.min_ratio <= self.mean_ratio <= self.max_ratio, 'min ≤ mean ≤ max'
        return self


@dataclass
class SampleValues:
    """ Per-sample results of a run, in index order """
    config: EnsembleConfig

    # Entangled values (enclosure midpoints)
    values: np.ndarray

    # Classical values; None unless requested
    classical: Optional[np.ndarray]

    @property
    def ratios(self) -> np.ndarray:
        return self.values / norm_factor(self.config.n)


def evaluate_samples(cfg: EnsembleConfig) -> SampleValues:
    """ Value every game of the run

    Games are split into contiguous chunks of indices that are evaluated in parallel
    and concatenated in index order.
    """
    tasks = [
        (cfg, indices)
        for indices in chunked_ranges(cfg.samples, 4 * cfg.workers)
    ]
    chunks = parallel_map(_evaluate_chunk, tasks, workers=cfg.workers)

    return SampleValues(
        config=cfg,
        values=np.concatenate([v for v, _ in chunks]),
        classical=np.concatenate([c for _, c in chunks]) if cfg.classical else None,
    )


def run_ensemble(cfg: EnsembleConfig) -> EnsembleStats:
    """ Statistics of value / norm_factor(n) over the games of the run """
    result = evaluate_samples(cfg)
    stats = summarize(result)
    logger.info('n=%d: %d games, mean ratio %.6f ± %.6f', cfg.n, cfg.samples, stats.mean_ratio, stats.std_ratio)
    return stats


def summarize(result: SampleValues) -> EnsembleStats:
    """ Reduce per-sample results in index order """
    cfg = result.config
    ratios = result.ratios
    N = len(ratios)

    lo, hi = float(ratios.min()), float(ratios.max())
    mean = _mean(ratios)
    # The correctly rounded mean of equal values may be 1 ulp away from them
    mean = min(max(mean, lo), hi)
    std = math.sqrt(math.fsum((ratios - mean) ** 2) / (N - 1)) if N > 1 else 0.0

    mean_classical = mean_gap = None
    if result.classical is not None:
        mean_classical = _mean(result.classical)
        mean_gap = _mean(result.values / result.classical)

    return EnsembleStats(
        n=cfg.n,
        samples=N,
        seed=cfg.master_seed,
        norm_factor=norm_factor(cfg.n),
        mean_ratio=mean,
        std_ratio=std,
        min_ratio=lo,
        max_ratio=hi,
        frac_in_bounds=float(np.count_nonzero((RATIO_LOWER <= ratios) & (ratios <= RATIO_UPPER))) / N,
        mean_classical=mean_classical,
        mean_gap=mean_gap,
    )


def figure1_series(n_values: abc.Iterable[int], samples: int, master_seed: int, *,
                   tol: float = settings.DEFAULT_TOL,
                   workers: int = settings.DEFAULT_WORKERS,
                   classical: bool = False) -> list[EnsembleStats]:
    """ One run per n, all with the same master seed: the normalized mean value as a function of n """
    return [
        run_ensemble(EnsembleConfig(n=n, samples=samples, master_seed=master_seed, tol=tol, workers=workers, classical=classical))
        for n in n_values
    ]


def _evaluate_chunk(task: tuple[EnsembleConfig, range]) -> tuple[np.ndarray, np.ndarray]:
    cfg, indices = task
    if cfg.exhaustive:
        bits = enumerate_bit_matrix(cfg.n)[indices.start:indices.stop]
    else:
        bits = sample_bit_matrix(cfg.n, cfg.master_seed, indices)

    values = np.empty(len(bits))
    classical = np.full(len(bits), np.nan)
    for i, row in enumerate(bits):
        game = SymmetricGame(n=cfg.n, bits=tuple(bool(b) for b in row))
        values[i] = entangled_value(game, cfg.tol).midpoint
        if cfg.classical:
            classical[i] = classical_value(game).value
    return values, classical


def _mean(x: np.ndarray) -> float:
    """ Mean with an exactly rounded sum """
    return math.fsum(x) / len(x)
