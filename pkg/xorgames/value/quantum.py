""" Entangled value of a symmetric XOR game

The entangled value is the maximum modulus, on the unit circle, of the signed weighted polynomial

    Q(λ) = Σ_j (−1)^{G_j} p_j λ^j,     p_j = C(n,j)/2^n

Values are biases: probability of winning minus probability of losing.
The win probability is (1 + bias)/2.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np
import pydantic as pd

from xorgames.combinatorics import WeightVector, weights
from xorgames.config import settings
from xorgames.error import exc
from xorgames.game import SymmetricGame
from xorgames.trigpoly import ValueEnclosure, ModulusSquared, RealPartSquared, enclose_max_abs


class CirclePolynomial(pd.BaseModel):
    """ Q(λ) = Σ q_j λ^j with q_j = (−1)^{G_j} p_j """
    model_config = pd.ConfigDict(frozen=True)

    degree: int = pd.Field(ge=0)
    coefficients: tuple[float, ...]

    @pd.model_validator(mode='after')
    def _check_coefficients(self):
        q = self.coefficients
        assert len(q) == self.degree + 1, 'degree n has n+1 coefficients'
        assert all(c != 0 for c in q), '|q_j| = p_j > 0'
        assert abs(math.fsum(abs(c) for c in q) - 1) <= 1e-12, 'Σ |q_j| = 1'
        return self

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coefficients, dtype=float)


class SandwichReport(pd.BaseModel):
    """ max|Re Q| ≤ Val_Q ≤ max|Re Q| + max|Im Q| on the unit circle """
    model_config = pd.ConfigDict(frozen=True)

    # max |Σ q_j cos jα|
    cos_max: ValueEnclosure

    # max |Σ q_j sin jα|
    sin_max: ValueEnclosure

    # Val_Q
    value: ValueEnclosure

    holds: bool


def build_polynomial(g: SymmetricGame, w: Optional[WeightVector] = None) -> CirclePolynomial:
    """ q_j = (−1)^{G_j}·p_j: the sign of the stored weight is flipped where G_j = 1

    Raises:
        exc.E_DIMENSION_MISMATCH: the weights are for a different n
    """
    if w is None:
        w = weights(g.n)
    if w.n != g.n:
        raise exc.E_DIMENSION_MISMATCH.format(
            'Weights for n={got} cannot be used with a game of n={expected} players',
            expected=g.n, got=w.n,
        )

    return CirclePolynomial(
        degree=g.n,
        coefficients=tuple(-p if bit else p for bit, p in zip(g.bits, w.p)),
    )


def eval_magnitude(poly: CirclePolynomial, angle: float) -> float:
    """ |Σ q_j e^{ijα}|, with the real and imaginary parts accumulated separately """
    q = poly.array
    ja = np.arange(poly.degree + 1) * angle
    return math.hypot(float(np.dot(q, np.cos(ja))), float(np.dot(q, np.sin(ja))))


def global_max(poly: CirclePolynomial, tol: float = settings.DEFAULT_TOL) -> ValueEnclosure:
    """ Certified enclosure of max_α |Q(e^{iα})|

    Raises:
        exc.F_TOLERANCE_NOT_REACHED: diagnostic; not expected for n ≤ 1024
    """
    return enclose_max_abs(
        ModulusSquared(poly.array),
        lambda angle: eval_magnitude(poly, angle),
        tol,
    )


def entangled_value(g: SymmetricGame, tol: float = settings.DEFAULT_TOL) -> ValueEnclosure:
    """ Val_Q(G): the bias of the best entangled strategy """
    return global_max(build_polynomial(g), tol)


def corollary_sandwich(g: SymmetricGame, tol: float = settings.DEFAULT_TOL) -> SandwichReport:
    """ Bracket Val_Q between the cosine part and the sum of the cosine and sine parts of Q

    The cosine part Σ (−1)^{G_j} p_j cos jα is the random cosine polynomial whose maximum
    the bounds on M_n are about; the sine part is handled identically.
    """
    q = build_polynomial(g).array
    j = np.arange(g.n + 1)

    cos_max = enclose_max_abs(
        RealPartSquared(q),
        lambda angle: abs(float(np.dot(q, np.cos(j * angle)))),
        tol,
    )
    # Σ q_j sin jα = Re Σ (−i·q_j) e^{ijα}
    sin_max = enclose_max_abs(
        RealPartSquared(-1j * q),
        lambda angle: abs(float(np.dot(q, np.sin(j * angle)))),
        tol,
    )
    value = entangled_value(g, tol)

    return SandwichReport(
        cos_max=cos_max,
        sin_max=sin_max,
        value=value,
        holds=(cos_max.lower <= value.upper + tol) and (value.lower <= cos_max.upper + sin_max.upper + tol),
    )


def win_probability(bias: float) -> float:
    """ Probability of winning, given the bias P(win) − P(lose) """
    return (1 + bias) / 2
