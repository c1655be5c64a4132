""" Monte Carlo run configuration """

from __future__ import annotations

import pydantic as pd

from xorgames.config import settings


class EnsembleConfig(pd.BaseModel):
    """ One Monte Carlo run over random games of n players

    Game `i` of the run is `sample_game(n, SampleDescriptor(master_seed, i))` for i = 0..samples-1.
    """
    model_config = pd.ConfigDict(frozen=True)

    # Number of players; ln n must be positive
    n: int = pd.Field(ge=2, le=settings.MAX_FLOAT_N)

    samples: int = pd.Field(ge=1)
    master_seed: int = pd.Field(ge=0, lt=2 ** 64)

    # Enclosure tolerance of every entangled value
    tol: float = pd.Field(gt=0, default=settings.DEFAULT_TOL)

    workers: int = pd.Field(ge=1, default=settings.DEFAULT_WORKERS)

    # Also compute the classical value of every game
    classical: bool = False

    # Enumerate all 2^(n+1) games instead of sampling. `samples` must then be 2^(n+1)
    exhaustive: bool = False

    @pd.model_validator(mode='after')
    def _check_exhaustive(self):
        if self.exhaustive:
            assert self.n <= settings.BRUTE_FORCE_MAX_N, f'exhaustive mode supports n ≤ {settings.BRUTE_FORCE_MAX_N}'
            assert self.samples == 1 << (self.n + 1), 'exhaustive mode has exactly 2^(n+1) samples'
        return self

    @classmethod
    def exhaustive_for(cls, n: int, **kwargs) -> EnsembleConfig:
        """ A run over every game of n players """
        return cls(n=n, samples=1 << (n + 1), master_seed=0, exhaustive=True, **kwargs)
