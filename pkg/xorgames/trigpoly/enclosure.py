""" Value enclosures: a certified [lower, upper] bracket on a global maximum """

from __future__ import annotations

import math
from collections import abc

import pydantic as pd

from .engine import TrigSeries, maximize_squared


class ValueEnclosure(pd.BaseModel):
    """ [lower, upper] contains the global maximum; lower is the value at argmax_angle """
    model_config = pd.ConfigDict(frozen=True)

    lower: float = pd.Field(ge=0)
    upper: float = pd.Field(ge=0)
    argmax_angle: float = pd.Field(ge=0, lt=2 * math.pi)

    # Effective grid resolution reached by the certification
    grid_size: int = pd.Field(gt=0)

    @pd.model_validator(mode='after')
    def _check_order(self):
        assert self.lower <= self.upper, 'lower ≤ upper'
        return self

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lower + self.upper)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def __contains__(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def enclose_max_abs(series: TrigSeries, evaluate: abc.Callable[[float], float], tol: float) -> ValueEnclosure:
    """ Enclose max |f| where f² is the series' squared polynomial

    Args:
        series: The polynomial, as the engine sees it
        evaluate: |f| at one angle. `lower` is always `evaluate(argmax_angle)`
        tol: Required upper − lower
    """
    found = maximize_squared(series, tol)
    lower = evaluate(found.angle)
    return ValueEnclosure(
        lower=lower,
        upper=max(math.sqrt(found.upper), lower),
        argmax_angle=found.angle,
        grid_size=found.grid_size,
    )
