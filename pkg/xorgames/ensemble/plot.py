""" Plot script for the normalized mean value as a function of n

The script is self-contained: it only needs pandas and matplotlib (`pip install xorgames[plot]`).
"""

from __future__ import annotations

from pathlib import Path
from typing import Union

import pandas as pd

from xorgames.error import exc
from .csvfile import require_columns


# Columns the plot reads
PLOT_COLUMNS = ('n', 'samples', 'mean_ratio', 'std_ratio')

PLOT_SCRIPT = '''\
""" Mean entangled value of random games over √(R_n ln n)/2^n, with standard errors """

import matplotlib
matplotlib.use('Agg')

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

CSV_PATH = {csv_path!r}
FIGURE_PATH = {figure_path!r}

data = pd.read_csv(CSV_PATH).sort_values('n')
stderr = data['std_ratio'] / np.sqrt(data['samples'])

fig, ax = plt.subplots(figsize=(6, 4))
ax.errorbar(data['n'], data['mean_ratio'], yerr=stderr, fmt='o-', capsize=3)
ax.set_xlabel('n')
ax.set_ylabel(r'$\\overline{{Val(n)}} \\,/\\, (\\sqrt{{R_n \\ln n}} / 2^n)$')
ax.grid(True, alpha=0.3)
fig.tight_layout()
fig.savefig(FIGURE_PATH, dpi=150)
'''


def emit_plot_script(csv_path: Union[str, Path], out_path: Union[str, Path]) -> str:
    """ Write a plotting script for an ensemble CSV file; return its text

    The figure is saved next to the script, as a .png file of the same name.

    Raises:
        exc.E_INVALID_ARGUMENT: the CSV file does not exist
        exc.E_MISSING_COLUMNS: the CSV file lacks some of the columns the plot needs
    """
    csv_path, out_path = Path(csv_path), Path(out_path)
    if not csv_path.is_file():
        raise exc.E_INVALID_ARGUMENT.format('CSV file {path} does not exist', name='csv', path=str(csv_path))

    header = pd.read_csv(csv_path, nrows=0).columns
    require_columns(header, PLOT_COLUMNS, path=csv_path)

    text = PLOT_SCRIPT.format(
        csv_path=str(csv_path),
        figure_path=str(out_path.with_suffix('.png')),
    )
    out_path.write_text(text, encoding='utf-8')
    return text
