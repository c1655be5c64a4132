""" Exact binomial machinery

Row n of Pascal's triangle gives every quantity the rest of the package is built on:

* r_m = C(n, m), exact
* p_j = C(n, j) / 2^n: the probability that j of the n players receive the input 1
* R_n = Σ r_m², T_n = Σ r_m⁴
* the inequality T_n / R_n² ≤ 4/3 · n^(-1/2), checked in integers

Exact values are Python integers and Fractions; only `weights()` goes to floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import pydantic as pd

from xorgames.config import settings
from xorgames.error import exc


class BinomialRow(pd.BaseModel):
    """ Row n of Pascal's triangle: C(n, 0), ..., C(n, n) """
    model_config = pd.ConfigDict(frozen=True)

    n: int = pd.Field(ge=0)
    coefficients: tuple[int, ...]

    @pd.model_validator(mode='after')
    def _check_row(self):
        c = self.coefficients
        assert len(c) == self.n + 1, 'row n has n+1 entries'
        assert c == c[::-1], 'C(n,k) = C(n,n-k)'
        assert sum(c) == 1 << self.n, 'row sum is 2^n'
        assert min(c) >= 1, 'entries are positive'
        return self


class WeightVector(pd.BaseModel):
    """ Input-weight distribution p_j = C(n,j)/2^n in double precision """
    model_config = pd.ConfigDict(frozen=True)

    n: int = pd.Field(ge=0)
    p: tuple[float, ...]

    @pd.model_validator(mode='after')
    def _check_weights(self):
        p = self.p
        assert len(p) == self.n + 1, 'n+1 weights'
        assert all(w > 0 for w in p), 'weights are positive'
        assert p == p[::-1], 'p_j = p_{n-j} exactly'
        assert abs(math.fsum(p) - 1) <= 1e-12, 'weights sum to 1'
        return self


class PowerSums(pd.BaseModel):
    """ R_n = Σ r_m² and T_n = Σ r_m⁴, exact """
    model_config = pd.ConfigDict(frozen=True)

    n: int = pd.Field(ge=0)
    R: int
    T: int


class Lemma5Report(pd.BaseModel):
    """ T_n / R_n² ≤ 4/3 · n^(-1/2), evaluated exactly

    Also reports the first step of the usual proof: T_n / R_n² ≤ C(n, ⌊n/2⌋)² / C(2n, n)
    (the largest r_m² times Σ r_m², over (Σ r_m²)²).
    """
    model_config = pd.ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = pd.Field(ge=1)

    # T_n / R_n²
    ratio: Fraction

    # ratio² ≤ 16/(9n)
    holds: bool

    # C(n, ⌊n/2⌋)² / C(2n, n)
    central_ratio: Fraction

    # ratio ≤ central_ratio
    central_holds: bool


@lru_cache(maxsize=256)
def binomial_row(n: int) -> BinomialRow:
    """ Exact binomial coefficients C(n, 0..n) by the multiplicative formula """
    if n < 0:
        raise exc.E_INVALID_ARGUMENT.format('n must be nonnegative, got {n}', name='n', n=n)

    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return BinomialRow(n=n, coefficients=tuple(row))


@lru_cache(maxsize=256)
def weights(n: int) -> WeightVector:
    """ p_j = C(n,j)/2^n as doubles

    The multiplicative recurrence p_{j+1} = p_j·(n−j)/(j+1) runs from p_0 = 2^-n up to the middle of the row;
    the second half is mirrored, so p_j = p_{n−j} holds bit-exactly.

    Raises:
        exc.E_FLOAT_RANGE: n is so large that 2^-n underflows
    """
    if n < 0:
        raise exc.E_INVALID_ARGUMENT.format('n must be nonnegative, got {n}', name='n', n=n)
    if n > settings.MAX_FLOAT_N:
        raise exc.E_FLOAT_RANGE.format(
            'Weights 2^-{n} are below double precision range',
            'Use n ≤ {limit}, or the exact rational functions',
            n=n,
            limit=settings.MAX_FLOAT_N,
        )

    p = [0.0] * (n + 1)
    p[0] = math.ldexp(1.0, -n)
    for j in range(n // 2):
        p[j + 1] = p[j] * (n - j) / (j + 1)
    for j in range(n // 2 + 1, n + 1):
        p[j] = p[n - j]
    return WeightVector(n=n, p=tuple(p))


def exact_weights(n: int) -> tuple[Fraction, ...]:
    """ p_j = C(n,j)/2^n as exact rationals. No range limit. """
    denominator = 1 << n
    return tuple(Fraction(c, denominator) for c in binomial_row(n).coefficients)


@lru_cache(maxsize=256)
def power_sums(n: int) -> PowerSums:
    """ R_n and T_n, exact

    R_n = C(2n, n) by Vandermonde's identity: the identity is asserted.
    """
    row = binomial_row(n).coefficients
    R = sum(r * r for r in row)
    T = sum((r * r) ** 2 for r in row)
    assert R == math.comb(2 * n, n), 'Vandermonde: Σ C(n,m)² = C(2n,n)'
    return PowerSums(n=n, R=R, T=T)


def lemma5_check(n: int) -> Lemma5Report:
    """ Check T_n / R_n² ≤ 4/3 · n^(-1/2) in exact integer arithmetic

    Both sides are squared to keep the irrational n^(-1/2) out of the comparison:
    (T/R²)² ≤ 16/(9n)  ⇔  9n·T² ≤ 16·R⁴
    """
    if n < 1:
        raise exc.E_INVALID_ARGUMENT.format('n must be positive, got {n}', name='n', n=n)

    sums = power_sums(n)
    R, T = sums.R, sums.T
    middle = math.comb(n, n // 2)

    return Lemma5Report(
        n=n,
        ratio=Fraction(T, R * R),
        holds=9 * n * T * T <= 16 * R ** 4,
        central_ratio=Fraction(middle * middle, R),
        # T/R² ≤ middle²/R  ⇔  T ≤ middle²·R
        central_holds=T <= middle * middle * R,
    )


def norm_factor(n: int) -> float:
    """ √(R_n·ln n) / 2^n = √(C(2n,n)·ln n) / 2^n: the scale of the entangled value of a random game

    Computed in log space: C(2n,n) and 2^n leave the double range long before their ratio does.
    """
    if n < 2:
        raise exc.E_INVALID_ARGUMENT.format('norm_factor needs n ≥ 2 (ln 1 = 0), got {n}', name='n', n=n)

    # math.log() accepts arbitrarily large integers
    log_norm = 0.5 * (math.log(math.comb(2 * n, n)) + math.log(math.log(n))) - n * math.log(2)
    return math.exp(log_norm)
