""" Test bench/rademacher.py """

import math

import numpy as np
import pytest

from xorgames.bench import (
    C1, C2, CosinePolynomial, RademacherCosinePoly,
    max_abs_rademacher_poly, level_interval, rademacher_maxima, theorem_event_frequency,
)
from xorgames.combinatorics import weights, norm_factor
from xorgames.error import exc
from xorgames.game import sample_bit_matrix

from tests.lib import dense_max_abs_cos


def test_constants():
    assert C1 == pytest.approx(0.14433756729740643)
    assert C2 == 2.0


def test_rademacher_poly():
    """ Test: RademacherCosinePoly """
    p = RademacherCosinePoly.make(3, [1, -1, 1, 1])
    assert p.scale == 0.125
    assert p.factor == 1.0
    assert p.coefficients == weights(3).p
    assert list(p.signed_coefficients) == [0.125, -0.375, 0.375, 0.125]

    # Binomial scale
    p = RademacherCosinePoly.make(3, [1, -1, 1, 1], scale=1.0)
    assert p.coefficients == (1.0, 3.0, 3.0, 1.0)
    assert p(0.0)[0] == pytest.approx(2.0)

    with pytest.raises(ValueError):
        RademacherCosinePoly.make(3, [1, -1, 1])
    with pytest.raises(ValueError):
        RademacherCosinePoly.make(1, [1, 0])
    with pytest.raises(ValueError):
        RademacherCosinePoly.make(1, [1, 1], scale=0.0)


def test_max_abs_known():
    """ Test: max_abs_rademacher_poly() with known maxima """
    # All +1: Σ p_m = 1 at x = 0
    found = max_abs_rademacher_poly(RademacherCosinePoly.make(10, [1] * 11))
    assert found.midpoint == pytest.approx(1.0, abs=1e-9)
    assert min(found.argmax_angle, 2 * math.pi - found.argmax_angle) < 1e-6

    # 1 − cos x: 2 at π
    found = max_abs_rademacher_poly(RademacherCosinePoly.make(1, [1, -1], scale=1.0))
    assert found.midpoint == pytest.approx(2.0, abs=1e-9)
    assert found.argmax_angle == pytest.approx(math.pi, abs=1e-6)

    # Generic coefficients
    found = max_abs_rademacher_poly(CosinePolynomial(coefficients=(0.0, 1.0)))
    assert found.midpoint == pytest.approx(1.0, abs=1e-9)


def test_max_abs_dense(rng: np.random.Generator):
    """ Test: max_abs_rademacher_poly() against a dense grid """
    for n in [2, 5, 17, 40, 120]:
        signs = rng.choice([-1, 1], size=n + 1)
        p = RademacherCosinePoly.make(n, signs)
        found = max_abs_rademacher_poly(p)
        dense = dense_max_abs_cos(p.signed_coefficients)
        assert found.width <= 1e-9
        assert found.lower - 1e-6 <= dense <= found.upper + 1e-12


def test_max_abs_second_peak():
    """ Test: a maximum found only after halving is refined to full precision """
    # Seed 0, game 71: the best coarse grid point lies on a lower peak
    signs = np.where(sample_bit_matrix(100, 0, [71])[0], -1, 1)
    p = RademacherCosinePoly.make(100, signs)
    found = max_abs_rademacher_poly(p)
    dense = dense_max_abs_cos(p.signed_coefficients)
    assert found.width <= 1e-9
    assert found.lower - 1e-6 <= dense <= found.upper + 1e-12

    # More sampled games of the same size
    for row in sample_bit_matrix(100, 1, range(60, 80)):
        assert max_abs_rademacher_poly(RademacherCosinePoly.make(100, np.where(row, -1, 1))).width <= 1e-9


def test_max_abs_scale(rng: np.random.Generator):
    """ Test: the enclosure scales with the coefficients """
    n = 30
    signs = rng.choice([-1, 1], size=n + 1)
    base = max_abs_rademacher_poly(RademacherCosinePoly.make(n, signs))

    scale = 2.0 ** -20
    found = max_abs_rademacher_poly(RademacherCosinePoly.make(n, signs, scale=scale), tol=1e-9 * scale * 2 ** n)
    assert found.lower == base.lower * 2 ** (n - 20)
    assert found.upper == base.upper * 2 ** (n - 20)
    assert found.argmax_angle == base.argmax_angle

    # Far beyond the double range of the binomial coefficients
    p = RademacherCosinePoly.make(1024, np.ones(1025))
    assert max_abs_rademacher_poly(p).midpoint == pytest.approx(1.0, abs=1e-9)


def test_level_interval():
    """ Test: level_interval() """
    # |cos x| ≥ 1/2 on [−π/3, π/3]
    found = level_interval(CosinePolynomial(coefficients=(0.0, 1.0)), 0.5)
    assert found.length == pytest.approx(2 * math.pi / 3, abs=1e-6)
    lo, hi = found.interval
    assert 0 <= lo < 2 * math.pi
    assert abs(math.cos((lo + hi) / 2)) == pytest.approx(1.0, abs=1e-9)
    assert found.ok

    # Constant: the whole circle
    found = level_interval(CosinePolynomial(coefficients=(1.0,)), 0.5)
    assert found.interval == (0.0, 2 * math.pi)
    assert found.ok


def test_level_interval_random(rng: np.random.Generator):
    """ Test: the arc of a random polynomial is long enough, and |P| ≥ θM inside it """
    for n in [5, 20, 60]:
        p = RademacherCosinePoly.make(n, rng.choice([-1, 1], size=n + 1))
        top = max_abs_rademacher_poly(p).lower
        for theta in (0.3, 0.5, 0.9):
            found = level_interval(p, theta)
            assert found.ok
            assert found.length >= (1 - theta) / n
            inside = np.linspace(*found.interval, 101)
            assert (np.abs(p(inside)) >= theta * top - 1e-9).all()


def test_level_interval_errors():
    """ Test: level_interval() rejects bad input """
    with pytest.raises(exc.E_DEGENERATE_POLYNOMIAL):
        level_interval(CosinePolynomial(coefficients=(0.0, 0.0)), 0.5)

    for theta in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(exc.E_INVALID_ARGUMENT):
            level_interval(CosinePolynomial(coefficients=(0.0, 1.0)), theta)


def test_rademacher_maxima():
    """ Test: bit rows map to sign vectors """
    bits = np.array([[0, 0, 0], [1, 1, 1]], dtype=bool)
    assert rademacher_maxima(2, bits) == pytest.approx([1.0, 1.0], abs=1e-9)


def test_event_frequency_exhaustive():
    """ Test: theorem_event_frequency(exhaustive=True) """
    found = theorem_event_frequency(2, 0, 0, exhaustive=True)
    assert found.samples == 8
    assert 0 <= found.freq_lower <= 1
    assert found.min_ratio <= found.mean_ratio <= found.max_ratio

    with pytest.raises(exc.E_TOO_LARGE):
        theorem_event_frequency(13, 0, 0, exhaustive=True)
    with pytest.raises(exc.E_INVALID_ARGUMENT):
        theorem_event_frequency(1, 10, 0)


def test_event_frequency_sampled():
    """ Test: sampled frequencies are reproducible """
    a = theorem_event_frequency(10, 40, 7)
    b = theorem_event_frequency(10, 40, 7, workers=2)
    assert a == b
    assert a.samples == 40

    # Sign vector i is the game at index i
    maxima = rademacher_maxima(10, sample_bit_matrix(10, 7, range(40)))
    assert a.max_ratio == maxima.max() / norm_factor(10)
    assert a.min_ratio == maxima.min() / norm_factor(10)


@pytest.mark.slow
def test_event_frequency_n100():
    """ Test: both events are frequent at n = 100 """
    found = theorem_event_frequency(100, 2000, 1)
    assert found.freq_lower >= 0.99
    assert found.freq_upper >= 0.99


@pytest.mark.slow
def test_level_interval_many(rng: np.random.Generator):
    """ Test: the arc is long enough on many random polynomials """
    for _ in range(1000):
        n = int(rng.integers(1, 51))
        p = RademacherCosinePoly.make(n, rng.choice([-1, 1], size=n + 1))
        theta = float(rng.choice([0.3, 0.6, 0.9]))
        assert level_interval(p, theta).ok, (n, theta, p.signs)
