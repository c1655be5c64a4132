""" Check that the entangled value of random games lies between C1·norm_factor(n) and 4·norm_factor(n) """

from __future__ import annotations

from typing import Optional

import numpy as np
import pydantic as pd

from xorgames.config import settings
from .config import EnsembleConfig
from .run import evaluate_samples, RATIO_LOWER, RATIO_UPPER


class BoundsReport(pd.BaseModel):
    model_config = pd.ConfigDict(frozen=True)

    n: int
    samples: int
    seed: int

    # Per sample: C1·norm ≤ value ≤ 4·norm
    indicators: tuple[bool, ...]

    # Fraction of samples satisfying each bound, and both
    frac_lower: float
    frac_upper: float
    fraction: float

    # The pass threshold; None when no claim is made
    threshold: Optional[float] = None

    @property
    def passed(self) -> Optional[bool]:
        """ fraction ≥ threshold; None when no claim is made """
        if self.threshold is None:
            return None
        return self.fraction >= self.threshold


def verify_bounds(n: int, samples: int, master_seed: int, *,
                  threshold: Optional[float] = None,
                  tol: float = settings.DEFAULT_TOL,
                  workers: int = settings.DEFAULT_WORKERS) -> BoundsReport:
    """ Per-sample bound indicators and their frequencies

    Args:
        threshold: Required fraction. By default, `settings.VERIFY_THRESHOLD` from n = `settings.VERIFY_CLAIM_MIN_N` on;
            below that n the asymptotic regime is not reached and no claim is made.
    """
    cfg = EnsembleConfig(n=n, samples=samples, master_seed=master_seed, tol=tol, workers=workers)
    ratios = evaluate_samples(cfg).ratios

    lower_ok = ratios >= RATIO_LOWER
    upper_ok = ratios <= RATIO_UPPER
    both = lower_ok & upper_ok

    if threshold is None and n >= settings.VERIFY_CLAIM_MIN_N:
        threshold = settings.VERIFY_THRESHOLD

    return BoundsReport(
        n=n,
        samples=samples,
        seed=master_seed,
        indicators=tuple(bool(b) for b in both),
        frac_lower=float(np.mean(lower_ok)),
        frac_upper=float(np.mean(upper_ok)),
        fraction=float(np.mean(both)),
        threshold=threshold,
    )
