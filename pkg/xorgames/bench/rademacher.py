""" Random cosine polynomials with binomial coefficients

    P_n(x) = Σ_{m=0..n} r_m ε_m cos mx,     r_m = C(n,m),  ε_m independent fair signs

M_n = max_x |P_n(x)| concentrates between C1·√(R_n ln n) and C2·√(R_n ln n) with C1 = 1/(4√3), C2 = 2.

r_m overflows a double near n ≈ 1030. Coefficients are stored as r_m·scale with the default scale 2^-n,
which makes them the game weights p_m: a sign vector ε is then exactly the game with G_m = (1 − ε_m)/2,
and P_n(x) is the real part of that game's polynomial at λ = e^{ix}.
"""

from __future__ import annotations

import logging
import math
from collections import abc
from typing import Optional, Union

import numpy as np
import pydantic as pd

from xorgames.combinatorics import weights, norm_factor
from xorgames.config import settings
from xorgames.error import exc
from xorgames.game import sample_bit_matrix, enumerate_bit_matrix
from xorgames.tools.python.pool import parallel_map, chunked_ranges
from xorgames.trigpoly import ValueEnclosure, RealPartSquared, enclose_max_abs
from xorgames.trigpoly.engine import TWO_PI


logger = logging.getLogger(__name__)

# M_n ≥ C1·√(R_n ln n) and M_n ≤ C2·√(R_n ln n) with probability → 1
C1 = 1 / (4 * math.sqrt(3))
C2 = 2.0


class CosinePolynomial(pd.BaseModel):
    """ Σ a_m cos mx with arbitrary real coefficients """
    model_config = pd.ConfigDict(frozen=True)

    coefficients: tuple[float, ...] = pd.Field(min_length=1)

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    @property
    def signed_coefficients(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=float)

    def __call__(self, x: Union[float, np.ndarray]) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        return np.cos(np.outer(x, np.arange(self.n + 1))) @ self.signed_coefficients


class RademacherCosinePoly(pd.BaseModel):
    """ P_n(x) = Σ r_m ε_m cos mx, with coefficients r_m·scale """
    model_config = pd.ConfigDict(frozen=True)

    n: int = pd.Field(ge=0)

    # ε_0..ε_n
    signs: tuple[int, ...]

    # The coefficients are C(n,m)·scale
    scale: float = pd.Field(gt=0)

    @pd.model_validator(mode='after')
    def _check_signs(self):
        assert len(self.signs) == self.n + 1, 'n+1 signs'
        assert all(s in (1, -1) for s in self.signs), 'signs are ±1'
        return self

    @classmethod
    def make(cls, n: int, signs: abc.Iterable[int], scale: Optional[float] = None) -> RademacherCosinePoly:
        """ P_n for the given sign vector; the default scale is 2^-n """
        if scale is None:
            scale = math.ldexp(1.0, -n)
        return cls(n=n, signs=tuple(int(s) for s in signs), scale=scale)

    @property
    def factor(self) -> float:
        """ scale·2^n: the ratio of the coefficients to the weights p_m """
        return math.ldexp(self.scale, self.n)

    @property
    def coefficients(self) -> tuple[float, ...]:
        """ r_m·scale """
        factor = self.factor
        return tuple(p * factor for p in weights(self.n).p)

    @property
    def normalized(self) -> np.ndarray:
        """ ε_m·p_m: the signed coefficients divided by `factor` """
        return np.asarray(self.signs, dtype=float) * np.asarray(weights(self.n).p)

    @property
    def signed_coefficients(self) -> np.ndarray:
        return self.normalized * self.factor

    __call__ = CosinePolynomial.__call__


AnyCosinePolynomial = Union[CosinePolynomial, RademacherCosinePoly]


class LevelInterval(pd.BaseModel):
    """ An arc [lo, hi] on which |P| ≥ θ·M """
    model_config = pd.ConfigDict(frozen=True)

    # lo ∈ [0, 2π); hi > 2π when the arc wraps through 0
    interval: tuple[float, float]

    # length ≥ (1−θ)/n
    ok: bool

    @property
    def length(self) -> float:
        lo, hi = self.interval
        return hi - lo


class EventFrequency(pd.BaseModel):
    """ Frequencies of C1·√(R_n ln n) ≤ M_n and M_n ≤ C2·√(R_n ln n) over a sample of sign vectors """
    model_config = pd.ConfigDict(frozen=True)

    n: int = pd.Field(ge=2)
    samples: int = pd.Field(ge=1)

    freq_lower: float = pd.Field(ge=0, le=1)
    freq_upper: float = pd.Field(ge=0, le=1)

    # M_n / √(R_n ln n) over the sample: the constants the data supports
    min_ratio: float
    mean_ratio: float
    max_ratio: float


def max_abs_rademacher_poly(p: AnyCosinePolynomial, tol: float = settings.DEFAULT_TOL) -> ValueEnclosure:
    """ Certified enclosure of max_x |P(x)|

    A Rademacher polynomial is maximized in the weight normalization and scaled back:
    the bounds are exactly proportional to the scale.

    Args:
        tol: Absolute tolerance on the returned bounds
    """
    if isinstance(p, RademacherCosinePoly):
        coefficients, factor = p.normalized, p.factor
    else:
        coefficients, factor = p.signed_coefficients, 1.0

    j = np.arange(len(coefficients))
    found = enclose_max_abs(
        RealPartSquared(coefficients),
        lambda x: abs(float(np.dot(coefficients, np.cos(j * x)))),
        tol / factor,
    )
    if factor == 1.0:
        return found
    return ValueEnclosure(
        lower=found.lower * factor,
        upper=found.upper * factor,
        argmax_angle=found.argmax_angle,
        grid_size=found.grid_size,
    )


def level_interval(p: AnyCosinePolynomial, theta: float) -> LevelInterval:
    """ The maximal arc around the argmax of |P| on which |P| ≥ θ·M

    The arc is found by stepping away from the argmax on a fine grid until |P| − θM changes sign,
    and the endpoints are then refined by bisection on the continuous function.

    Raises:
        exc.E_DEGENERATE_POLYNOMIAL: all coefficients are zero
    """
    if not 0 < theta < 1:
        raise exc.E_INVALID_ARGUMENT.format('theta must be in (0, 1), got {theta}', name='theta', theta=theta)
    if not np.any(p.signed_coefficients):
        raise exc.E_DEGENERATE_POLYNOMIAL('All coefficients of the polynomial are zero')

    top = max_abs_rademacher_poly(p, settings.DEFAULT_TOL * float(np.abs(p.signed_coefficients).sum()))
    level = theta * top.lower
    center = top.argmax_angle

    def excess(x):
        return np.abs(p(x)) - level

    # Fine grid of offsets from the argmax
    steps = max(256 * (p.n + 1), 1024)
    h = TWO_PI / steps
    offsets = h * np.arange(1, steps + 1)

    right = _first_crossing(excess, center, offsets, +1)
    if right is None:
        # |P| ≥ θM on the whole circle
        lo, hi = 0.0, TWO_PI
    else:
        left = _first_crossing(excess, center, offsets, -1)
        lo = center - left
        hi = center + right
        shift = math.floor(lo / TWO_PI) * TWO_PI
        lo, hi = lo - shift, hi - shift

    return LevelInterval(
        interval=(lo, hi),
        ok=hi - lo >= (1 - theta) / max(p.n, 1),
    )


def _first_crossing(excess, center: float, offsets: np.ndarray, direction: int) -> Optional[float]:
    """ Distance from `center` to the first zero of `excess` in `direction`, or None if there is none """
    values = excess(center + direction * offsets)
    negative = np.flatnonzero(values < 0)
    if len(negative) == 0:
        return None

    k = int(negative[0])
    a = 0.0 if k == 0 else float(offsets[k - 1])
    b = float(offsets[k])

    # excess(center ± a) ≥ 0 > excess(center ± b)
    for _ in range(60):
        mid = 0.5 * (a + b)
        if mid in (a, b):
            break
        if excess(center + direction * mid)[0] >= 0:
            a = mid
        else:
            b = mid
    return a


def rademacher_maxima(n: int, bits: np.ndarray, tol: float = settings.DEFAULT_TOL) -> np.ndarray:
    """ M_n (weight-normalized midpoint) for every sign vector, given as rows of bits: ε_m = (−1)^bit """
    out = np.empty(len(bits))
    for i, row in enumerate(bits):
        poly = RademacherCosinePoly.make(n, np.where(row, -1, 1))
        out[i] = max_abs_rademacher_poly(poly, tol).midpoint
    return out


def theorem_event_frequency(n: int, samples: int, master_seed: int, *,
                            exhaustive: bool = False,
                            workers: int = settings.DEFAULT_WORKERS,
                            tol: float = settings.DEFAULT_TOL) -> EventFrequency:
    """ Empirical frequencies of both events over sampled sign vectors

    Sign vector `i` is the game sampled at index i: the same (seed, i) gives the same M_n
    whatever the sample size.

    Args:
        exhaustive: Enumerate all 2^(n+1) sign vectors instead of sampling; `samples` and `master_seed` are ignored
    """
    if n < 2:
        raise exc.E_INVALID_ARGUMENT.format('The event thresholds need n ≥ 2 (ln 1 = 0), got {n}', name='n', n=n)

    if exhaustive:
        if n > settings.BRUTE_FORCE_MAX_N:
            raise exc.E_TOO_LARGE.format(
                'Cannot enumerate the 2^{size} sign vectors of n={n}',
                'Use n ≤ {limit}, or sampling',
                n=n, size=n + 1, limit=settings.BRUTE_FORCE_MAX_N,
            )
        maxima = rademacher_maxima(n, enumerate_bit_matrix(n), tol)
    else:
        if samples < 1:
            raise exc.E_INVALID_ARGUMENT.format('samples must be positive, got {samples}', name='samples', samples=samples)
        chunks = parallel_map(
            _sampled_maxima,
            [(n, master_seed, indices, tol) for indices in chunked_ranges(samples, 4 * workers)],
            workers=workers,
        )
        maxima = np.concatenate(chunks)

    # Thresholds in the weight normalization: √(R_n ln n)·2^-n
    norm = norm_factor(n)
    ratios = maxima / norm
    logger.info('n=%d: %d sign vectors, M_n/√(R_n ln n) in [%.4f, %.4f]', n, len(ratios), ratios.min(), ratios.max())

    return EventFrequency(
        n=n,
        samples=len(ratios),
        freq_lower=float(np.count_nonzero(ratios >= C1)) / len(ratios),
        freq_upper=float(np.count_nonzero(ratios <= C2)) / len(ratios),
        min_ratio=float(ratios.min()),
        mean_ratio=math.fsum(ratios) / len(ratios),
        max_ratio=float(ratios.max()),
    )


def _sampled_maxima(task: tuple[int, int, range, float]) -> np.ndarray:
    n, master_seed, indices, tol = task
    return rademacher_maxima(n, sample_bit_matrix(n, master_seed, indices), tol)
