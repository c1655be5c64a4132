""" CSV files of ensemble statistics

One row per run; floats are printed with 17 significant digits, so a file read back reproduces the doubles exactly.
The classical columns are empty when the run had no classical values.
"""

from __future__ import annotations

import io
import math
from collections import abc
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from xorgames.config import settings
from xorgames.error import exc
from .run import EnsembleStats


COLUMNS = (
    'n', 'samples', 'seed', 'norm_factor',
    'mean_ratio', 'std_ratio', 'min_ratio', 'max_ratio', 'frac_in_bounds',
    'mean_classical', 'mean_gap',
)


def stats_frame(rows: abc.Iterable[EnsembleStats]) -> pd.DataFrame:
    """ Statistics as a DataFrame with the documented columns """
    return pd.DataFrame([row.model_dump() for row in rows], columns=list(COLUMNS))


def write_stats_csv(rows: abc.Iterable[EnsembleStats], path: Optional[Union[str, Path]] = None) -> str:
    """ Write the CSV file; return its text as well """
    text = stats_frame(rows).to_csv(
        index=False,
        float_format=settings.CSV_FLOAT_FORMAT,
        na_rep='',
        lineterminator='\n',
    )
    if path is not None:
        Path(path).write_text(text, encoding='utf-8')
    return text


def read_stats_csv(source: Union[str, Path, io.StringIO]) -> list[EnsembleStats]:
    """ Read statistics back

    Raises:
        exc.E_MISSING_COLUMNS: the file lacks some of the documented columns
    """
    # The seed is a 64-bit unsigned integer: keep it away from int64
    frame = pd.read_csv(source, dtype={'seed': str})
    require_columns(frame.columns, COLUMNS, path=source)

    return [
        EnsembleStats(**{
            name: _cell(name, value)
            for name, value in record.items()
            if name in COLUMNS
        })
        for record in frame.to_dict(orient='records')
    ]


def require_columns(present: abc.Iterable[str], required: abc.Iterable[str], *, path):
    """ Raise E_MISSING_COLUMNS unless every required column is present """
    present = set(present)
    missing = [name for name in required if name not in present]
    if missing:
        raise exc.E_MISSING_COLUMNS.format(
            'File {path} lacks the columns: {columns}',
            path=str(path),
            columns=', '.join(missing),
            missing=missing,
        )


def _cell(name: str, value):
    if hasattr(value, 'item'):
        value = value.item()
    if name == 'seed':
        return int(value)
    if isinstance(value, float) and math.isnan(value):
        return None
    return value
