""" Test bench/moments.py """

import itertools
import math

import numpy as np
import pytest

from xorgames.bench import exact_mgf, lemma1_check
from xorgames.bench.moments import log_cosh
from xorgames.combinatorics import weights


def test_log_cosh():
    """ Test: log_cosh() is accurate on both branches """
    x = np.array([0.0, 0.5, 0.999, 1.0, 3.0, 20.0, -20.0])
    assert log_cosh(x) == pytest.approx(np.log(np.cosh(x)), rel=1e-13, abs=1e-300)

    # Small x: cosh x rounds to 1 but log cosh x does not vanish
    assert log_cosh(np.array([1e-8]))[0] == pytest.approx(5e-17, rel=1e-10)

    # No overflow
    assert log_cosh(np.array([1e6]))[0] == pytest.approx(1e6 - math.log(2), rel=1e-15)


def test_exact_mgf():
    """ Test: exact_mgf() """
    assert exact_mgf([1.0, 1.0], 1.0) == pytest.approx(math.cosh(1) ** 2, rel=1e-14)
    assert exact_mgf([1.0, 1.0], 1.0) == pytest.approx(2.38109785, abs=1e-8)
    assert exact_mgf([0.3, 0.7, 2.0], 0.0) == 1.0

    # Even in λ
    assert exact_mgf([0.3, 0.7, 2.0], 1.3) == exact_mgf([0.3, 0.7, 2.0], -1.3)

    # Overflow → inf
    assert exact_mgf([1000.0], 1.0) == math.inf


@pytest.mark.parametrize('n', [1, 4, 8, 12])
def test_exact_mgf_enumeration(n: int, rng: np.random.Generator):
    """ Test: exact_mgf() against the average over all 2^n sign vectors """
    c = rng.normal(size=n)
    signs = np.array(list(itertools.product((1, -1), repeat=n)), dtype=float)
    for lam in (-2.0, -0.5, 0.1, 1.0):
        expected = math.fsum(np.exp(lam * signs @ c)) / len(signs)
        assert exact_mgf(c, lam) == pytest.approx(expected, rel=1e-12)


def test_lemma1_check(rng: np.random.Generator):
    """ Test: lemma1_check() holds on binomial rows and random vectors """
    lambdas = np.arange(-16, 17) * 0.25

    for n in range(65):
        for lam in lambdas:
            report = lemma1_check(weights(n).p, lam)
            assert report.holds, (n, lam)
            assert report.lower <= report.upper

    for _ in range(100):
        c = rng.normal(size=int(rng.integers(1, 30)))
        for lam in lambdas:
            assert lemma1_check(c, lam).holds

    # λ = 0: everything is 1
    report = lemma1_check([0.5, 0.25], 0.0)
    assert (report.mgf, report.lower, report.upper) == (1.0, 1.0, 1.0)
    assert report.C == 0.3125
    assert report.D == 0.06640625

    # c = (1, 1), λ = 1
    report = lemma1_check([1.0, 1.0], 1.0)
    assert report.holds
    assert report.lower == pytest.approx(math.exp(-1))
    assert report.upper == pytest.approx(math.e)


def test_lemma1_check_overflow():
    """ Test: the comparison survives overflowing exponentials """
    report = lemma1_check([100.0, 50.0], 10.0)
    assert report.holds
    assert report.upper == math.inf
    assert report.mgf == math.inf

    # The 'lambda' alias
    assert report.model_dump(by_alias=True)['lambda'] == 10.0
