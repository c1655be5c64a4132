""" Test ensemble/csvfile.py, ensemble/plot.py """

import io
from pathlib import Path

import pytest

from xorgames.ensemble import COLUMNS, EnsembleConfig, run_ensemble, write_stats_csv, read_stats_csv, emit_plot_script
from xorgames.error import exc


HEADER = 'n,samples,seed,norm_factor,mean_ratio,std_ratio,min_ratio,max_ratio,frac_in_bounds,mean_classical,mean_gap'


@pytest.fixture(scope='module')
def rows():
    return [
        run_ensemble(EnsembleConfig(n=4, samples=6, master_seed=2 ** 64 - 1, classical=True)),
        run_ensemble(EnsembleConfig(n=9, samples=3, master_seed=0)),
    ]


def test_write_read(rows, tmp_path: Path):
    """ Test: write_stats_csv(), read_stats_csv() """
    text = write_stats_csv(rows)
    lines = text.splitlines()
    assert lines[0] == HEADER == ','.join(COLUMNS)
    assert len(lines) == 3

    # Empty classical columns
    assert lines[2].endswith(',,')
    assert lines[2].startswith('9,3,0,')

    # The seed survives as an unsigned 64-bit integer
    assert lines[1].startswith(f'4,6,{2 ** 64 - 1},')

    # Exact round trip
    assert read_stats_csv(io.StringIO(text)) == rows

    path = tmp_path / 'stats.csv'
    assert write_stats_csv(rows, path) == text
    assert path.read_text() == text
    assert read_stats_csv(path) == rows


def test_read_missing_columns(tmp_path: Path):
    """ Test: read_stats_csv() lists the missing columns """
    path = tmp_path / 'bad.csv'
    path.write_text('n,samples,seed\n2,1,0\n')

    with pytest.raises(exc.E_MISSING_COLUMNS) as e:
        read_stats_csv(path)
    assert e.value.info['missing'] == list(COLUMNS[3:])
    assert str(path) in e.value.error


def test_emit_plot_script(rows, tmp_path: Path):
    """ Test: emit_plot_script() """
    csv_path = tmp_path / 'stats.csv'
    write_stats_csv(rows, csv_path)

    out_path = tmp_path / 'plot.py'
    text = emit_plot_script(csv_path, out_path)
    assert out_path.read_text() == text
    assert repr(str(csv_path)) in text
    assert repr(str(tmp_path / 'plot.png')) in text

    # The script is valid Python
    compile(text, str(out_path), 'exec')


def test_emit_plot_script_errors(tmp_path: Path):
    """ Test: emit_plot_script() rejects bad input """
    with pytest.raises(exc.E_INVALID_ARGUMENT):
        emit_plot_script(tmp_path / 'missing.csv', tmp_path / 'plot.py')

    path = tmp_path / 'bad.csv'
    path.write_text('n,samples\n2,1\n')
    with pytest.raises(exc.E_MISSING_COLUMNS) as e:
        emit_plot_script(path, tmp_path / 'plot.py')
    assert e.value.info['missing'] == ['mean_ratio', 'std_ratio']
    assert not (tmp_path / 'plot.py').exists()
