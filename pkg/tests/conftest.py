import numpy as np
import pytest

from xorgames.game import SymmetricGame, parse_game


@pytest.fixture()
def chsh() -> SymmetricGame:
    """ The CHSH game: win iff x AND y = a XOR b """
    return parse_game('2:001')


@pytest.fixture()
def rng() -> np.random.Generator:
    """ Test-only randomness, seeded """
    return np.random.default_rng(20240611)
