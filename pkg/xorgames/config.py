""" Package configuration

Lives in module at its top level. Easy to import.

There are no environment variables: every run-time knob is a CLI flag.
This module only holds the defaults those flags fall back to.
"""

import pydantic as pd


class Settings(pd.BaseModel):
    """ Defaults and hard limits """
    model_config = pd.ConfigDict(frozen=True)

    # Default absolute tolerance of a value enclosure: upper - lower
    DEFAULT_TOL: float = 1e-9

    # Default number of worker processes for Monte Carlo runs
    DEFAULT_WORKERS: int = 1

    # verify-bounds: default pass threshold, and the smallest n at which pass/fail is claimed
    VERIFY_THRESHOLD: float = 0.99
    VERIFY_CLAIM_MIN_N: int = 50

    # Largest n for double-precision weights: 2^-n underflows beyond it
    MAX_FLOAT_N: int = 1024

    # Largest n for the exhaustive classical strategy enumeration
    BRUTE_FORCE_MAX_N: int = 12

    # Effective grid resolution at which the certified optimizer gives up
    MAX_GRID_POINTS: int = 2 ** 22

    # Lossless double printing in CSV files
    CSV_FLOAT_FORMAT: str = '%.17g'


settings = Settings()
