""" Empirical check of the Paley–Zygmund inequality

For a nonnegative X with E X ≥ A > 0 and E X² ≤ B:

    P(X ≥ δA) ≥ (1−δ)² A²/B,    0 < δ < 1
"""

from __future__ import annotations

import math
from collections import abc

import numpy as np
import pydantic as pd

from xorgames.error import exc


class PaleyZygmundReport(pd.BaseModel):
    model_config = pd.ConfigDict(frozen=True)

    # Fraction of the samples ≥ δA
    empirical: float = pd.Field(ge=0, le=1)

    # (1−δ)² A²/B
    bound: float = pd.Field(ge=0)

    # empirical ≥ bound − 3·√(bound/N)
    holds: bool


def paley_zygmund_check(samples: abc.Sequence[float], A: float, B: float, delta: float) -> PaleyZygmundReport:
    """ Compare the empirical tail frequency with the Paley–Zygmund bound

    The bound is about a probability; the frequency of N samples gets a slack of three standard errors.

    Raises:
        exc.E_PRECONDITION_VIOLATED: the samples do not satisfy the moment conditions
    """
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise _precondition('at least one sample')
    if not 0 < delta < 1:
        raise _precondition('0 < delta < 1', delta=delta)
    if not A > 0:
        raise _precondition('A > 0', A=A)
    if (x < 0).any():
        raise _precondition('samples are nonnegative')

    mean = math.fsum(x) / x.size
    mean_square = math.fsum(x * x) / x.size
    if mean < A:
        raise _precondition('mean(samples) ≥ A', A=A, mean=mean)
    if mean_square > B:
        raise _precondition('mean(samples²) ≤ B', B=B, mean_square=mean_square)

    empirical = float(np.count_nonzero(x >= delta * A)) / x.size
    bound = (1 - delta) ** 2 * A * A / B
    return PaleyZygmundReport(
        empirical=empirical,
        bound=bound,
        holds=empirical >= bound - 3 * math.sqrt(bound / x.size),
    )


def _precondition(condition: str, **info) -> exc.E_PRECONDITION_VIOLATED:
    return exc.E_PRECONDITION_VIOLATED.format(
        'Paley–Zygmund precondition failed: {condition}',
        condition=condition,
        **info
    )
