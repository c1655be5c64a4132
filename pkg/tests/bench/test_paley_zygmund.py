""" Test bench/paley_zygmund.py """

import numpy as np
import pytest

from xorgames.bench import paley_zygmund_check
from xorgames.error import exc


def test_paley_zygmund_check(rng: np.random.Generator):
    """ Test: paley_zygmund_check() """
    # Constant X
    report = paley_zygmund_check([1.0] * 10, A=1.0, B=1.0, delta=0.5)
    assert report.empirical == 1.0
    assert report.bound == 0.25
    assert report.holds

    # X = (Σ ε_m c_m)²: E X = Σc², E X² ≤ 3(Σc²)²
    c = np.array([0.5, 0.3, 0.2, 0.1])
    signs = rng.choice([-1.0, 1.0], size=(20_000, len(c)))
    x = (signs @ c) ** 2
    A = min(float((c ** 2).sum()), float(x.mean()))
    B = max(3 * float((c ** 2).sum()) ** 2, float((x ** 2).mean()))
    for delta in (0.1, 0.5, 0.9):
        report = paley_zygmund_check(x, A=A, B=B, delta=delta)
        assert report.holds
        assert 0 <= report.bound <= 1


@pytest.mark.parametrize(('samples', 'A', 'B', 'delta', 'condition'), [
    ([], 1.0, 1.0, 0.5, 'at least one sample'),
    ([1.0], 1.0, 1.0, 0.0, '0 < delta < 1'),
    ([1.0], 1.0, 1.0, 1.0, '0 < delta < 1'),
    ([1.0], 0.0, 1.0, 0.5, 'A > 0'),
    ([1.0, -1.0], 0.5, 1.0, 0.5, 'samples are nonnegative'),
    ([1.0, 1.0], 2.0, 10.0, 0.5, 'mean(samples) ≥ A'),
    ([2.0, 2.0], 1.0, 1.0, 0.5, 'mean(samples²) ≤ B'),
])
def test_paley_zygmund_preconditions(samples, A, B, delta, condition):
    """ Test: violated preconditions are reported """
    with pytest.raises(exc.E_PRECONDITION_VIOLATED) as e:
        paley_zygmund_check(samples, A=A, B=B, delta=delta)
    assert e.value.info['condition'] == condition
