""" Moment generating function of a Rademacher sum, and its two-sided Gaussian bound

For f = Σ c_m ε_m with independent fair signs ε_m,

    E e^{λf} = Π cosh(λ c_m)

and for every real λ

    exp(λ²C/2 − λ⁴D) ≤ E e^{λf} ≤ exp(λ²C/2),     C = Σ c_m², D = Σ c_m⁴
"""

from __future__ import annotations

import math
from collections import abc

import numpy as np
import pydantic as pd


# Relative slack of the log-space comparisons: rounding only
LOG_SLACK = 1e-14


class MomentBoundReport(pd.BaseModel):
    """ lower ≤ mgf ≤ upper, evaluated at one λ """
    model_config = pd.ConfigDict(frozen=True, populate_by_name=True)

    lambda_: float = pd.Field(alias='lambda')

    # Σ c_m²
    C: float
    # Σ c_m⁴
    D: float

    mgf: float
    lower: float
    upper: float

    holds: bool


def log_cosh(x: np.ndarray) -> np.ndarray:
    """ log cosh x, accurate for small |x| and free of overflow for large |x| """
    x = np.abs(np.asarray(x, dtype=float))
    small = x < 1
    with np.errstate(over='ignore'):
        return np.where(
            small,
            # cosh x − 1 = 2 sinh²(x/2)
            np.log1p(2 * np.sinh(np.where(small, x, 0) / 2) ** 2),
            x + np.log1p(np.exp(-2 * x)) - math.log(2),
        )


def log_mgf(c: abc.Sequence[float], lam: float) -> float:
    """ log E e^{λf} = Σ log cosh(λ c_m) """
    return math.fsum(log_cosh(lam * np.asarray(c, dtype=float)))


def exact_mgf(c: abc.Sequence[float], lam: float) -> float:
    """ E e^{λf} = Π cosh(λ c_m), exact for Rademacher signs

    Computed as exp(Σ log cosh); overflows to inf rather than raising.
    """
    return _exp(log_mgf(c, lam))


def lemma1_check(c: abc.Sequence[float], lam: float) -> MomentBoundReport:
    """ Evaluate both sides of the Gaussian MGF bound

    The comparison is done on logarithms, so it stays meaningful where the exponentials overflow.
    """
    a = np.asarray(c, dtype=float)
    C = math.fsum(a ** 2)
    D = math.fsum(a ** 4)

    log_upper = lam * lam * C / 2
    log_lower = log_upper - lam ** 4 * D
    log_value = log_mgf(a, lam)

    return MomentBoundReport(
        lambda_=lam,
        C=C,
        D=D,
        mgf=_exp(log_value),
        lower=_exp(log_lower),
        upper=_exp(log_upper),
        holds=(
            log_lower <= log_value + LOG_SLACK * (1 + abs(log_value)) and
            log_value <= log_upper + LOG_SLACK * (1 + abs(log_upper))
        ),
    )


def _exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf
