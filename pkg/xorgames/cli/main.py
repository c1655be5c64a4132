""" Command-line interface

Machine-readable results go to stdout (tab-separated tables or CSV); log messages and errors go to stderr.

Exit codes: 0 success, 1 a check has failed (or an unexpected failure), 2 usage error.
"""

import json
import logging
import math
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

import numpy as np
import typer

from xorgames import bench, combinatorics, ensemble, value
from xorgames.config import settings
from xorgames.error import exc
from xorgames.error.converting import converting_unexpected_errors
from xorgames.game import SymmetricGame, SampleDescriptor, parse_game, read_games, format_game, sample_game, sample_bit_matrix
from xorgames.structure.titled_enum import TitledEnum
from xorgames.tools.settings import logging as logging_settings


logger = logging.getLogger(__name__)

app = typer.Typer(
    help='Entangled and classical values of symmetric XOR games',
    no_args_is_help=True,
    add_completion=False,
)


class Check(TitledEnum):
    """ Checks of `sz-check` """
    MGF = '1', 'Rademacher MGF between exp(λ²C/2 − λ⁴D) and exp(λ²C/2)'
    LEVEL = '3', 'Arc where |P_n| ≥ θ·M_n is at least (1−θ)/n long'
    PALEY_ZYGMUND = '4', 'Paley–Zygmund tail bound'
    POWER_SUMS = '5', 'T_n/R_n² ≤ 4/3·n^(-1/2), exactly'
    EVENTS = 'events', 'Frequencies of C1·√(R_n ln n) ≤ M_n ≤ C2·√(R_n ln n) (reported)'


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, '--verbose', '-v', help='Debug logging, and error details'),
    quiet: bool = typer.Option(False, '--quiet', '-q', help='Warnings and errors only'),
):
    """ Entangled and classical values of symmetric XOR games """
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging_settings.basicConfig(level)
    ctx.obj = {'verbose': verbose}


@app.command('value')
def value_command(
    ctx: typer.Context,
    game: str = typer.Argument(..., help='A game like "2:001", or @path to a game file'),
    tol: float = typer.Option(settings.DEFAULT_TOL, help='Enclosure tolerance'),
):
    """ Entangled value: bias, win probability, argmax angle, enclosure """
    with reporting_errors(ctx):
        rows = []
        for g in _games(game):
            found = value.entangled_value(g, tol)
            rows.append((format_game(g), found.midpoint, value.win_probability(found.midpoint), found.argmax_angle, found.lower, found.upper))

    _print_table(('game', 'bias', 'win_probability', 'argmax_angle', 'lower', 'upper'), rows)


@app.command('classical')
def classical_command(
    ctx: typer.Context,
    game: str = typer.Argument(..., help='A game like "2:001", or @path to a game file'),
):
    """ Classical value: bias, win probability, and the best strategy class (k, c) """
    with reporting_errors(ctx):
        rows = []
        for g in _games(game):
            found = value.classical_value(g)
            rows.append((format_game(g), found.value, value.win_probability(found.value), found.best_k, found.best_c))

    _print_table(('game', 'value', 'win_probability', 'best_k', 'best_c'), rows)


@app.command('sample')
def sample_command(
    ctx: typer.Context,
    n: int = typer.Option(..., '--n', help='Number of players'),
    seed: int = typer.Option(..., '--seed', help='Master seed'),
    count: int = typer.Option(1, '--count', min=0, help='Number of games: indices 0..count-1'),
):
    """ Print random games, one per line """
    with reporting_errors(ctx):
        lines = [
            format_game(sample_game(n, SampleDescriptor(master_seed=seed, index=i)))
            for i in range(count)
        ]

    for line in lines:
        typer.echo(line)


@app.command('ensemble')
def ensemble_command(
    ctx: typer.Context,
    n: int = typer.Option(..., '--n', help='Number of players, ≥ 2'),
    samples: int = typer.Option(..., '--samples', help='Number of random games'),
    seed: int = typer.Option(..., '--seed', help='Master seed'),
    classical: bool = typer.Option(False, '--classical', help='Also compute classical values'),
    exhaustive: bool = typer.Option(False, '--exhaustive', help='Enumerate all 2^(n+1) games; --samples is ignored'),
    workers: int = typer.Option(settings.DEFAULT_WORKERS, '--workers', help='Worker processes'),
    tol: float = typer.Option(settings.DEFAULT_TOL, '--tol', help='Enclosure tolerance'),
    csv: Optional[Path] = typer.Option(None, '--csv', help='Write the CSV here instead of stdout'),
):
    """ Statistics of value/norm_factor(n) over random games, as one CSV row """
    with reporting_errors(ctx):
        if exhaustive:
            cfg = ensemble.EnsembleConfig.exhaustive_for(n, tol=tol, workers=workers, classical=classical)
        else:
            cfg = ensemble.EnsembleConfig(n=n, samples=samples, master_seed=seed, tol=tol, workers=workers, classical=classical)
        text = ensemble.write_stats_csv([ensemble.run_ensemble(cfg)], csv)

    if csv is None:
        typer.echo(text, nl=False)


@app.command('figure1')
def figure1_command(
    ctx: typer.Context,
    n_list: str = typer.Option(..., '--n-list', help='Comma-separated player counts, e.g. 10,20,30'),
    samples: int = typer.Option(..., '--samples', help='Number of random games per n'),
    seed: int = typer.Option(..., '--seed', help='Master seed'),
    csv: Optional[Path] = typer.Option(None, '--csv', help='Write the CSV here instead of stdout'),
    classical: bool = typer.Option(False, '--classical', help='Also compute classical values'),
    workers: int = typer.Option(settings.DEFAULT_WORKERS, '--workers', help='Worker processes'),
    tol: float = typer.Option(settings.DEFAULT_TOL, '--tol', help='Enclosure tolerance'),
):
    """ Normalized mean value as a function of n: one CSV row per n """
    with reporting_errors(ctx):
        rows = ensemble.figure1_series(_int_list(n_list), samples, seed, tol=tol, workers=workers, classical=classical)
        text = ensemble.write_stats_csv(rows, csv)

    if csv is None:
        typer.echo(text, nl=False)


@app.command('verify-bounds')
def verify_bounds_command(
    ctx: typer.Context,
    n: int = typer.Option(..., '--n', help='Number of players, ≥ 2'),
    samples: int = typer.Option(..., '--samples', help='Number of random games'),
    seed: int = typer.Option(..., '--seed', help='Master seed'),
    threshold: Optional[float] = typer.Option(
        None, '--threshold',
        help=f'Required fraction. Default: {settings.VERIFY_THRESHOLD} for n ≥ {settings.VERIFY_CLAIM_MIN_N}, no claim below',
    ),
    indicators: bool = typer.Option(False, '--indicators', help='Also print the per-game indicators'),
    workers: int = typer.Option(settings.DEFAULT_WORKERS, '--workers', help='Worker processes'),
    tol: float = typer.Option(settings.DEFAULT_TOL, '--tol', help='Enclosure tolerance'),
):
    """ Fraction of random games with C1·norm ≤ value ≤ 4·norm; exit code 1 below the threshold """
    with reporting_errors(ctx):
        report = ensemble.verify_bounds(n, samples, seed, threshold=threshold, tol=tol, workers=workers)

    result = {True: 'pass', False: 'fail', None: 'no-claim'}[report.passed]
    _print_table(
        ('n', 'samples', 'seed', 'frac_lower', 'frac_upper', 'fraction', 'threshold', 'result'),
        [(report.n, report.samples, report.seed, report.frac_lower, report.frac_upper, report.fraction,
          '' if report.threshold is None else report.threshold, result)],
    )
    if indicators:
        _print_table(('index', 'in_bounds'), [(i, int(b)) for i, b in enumerate(report.indicators)])

    if report.passed is False:
        raise typer.Exit(exc.EXIT_FAILED)


@app.command('sz-check')
def sz_check_command(
    ctx: typer.Context,
    lemma: Optional[Check] = typer.Option(None, '--lemma', help=f'Run one check only. {Check.describe()}'),
    n: int = typer.Option(20, '--n', help='Degree of the random polynomials (≥ 2 for the events)'),
    samples: int = typer.Option(200, '--samples', help='Number of random sign vectors'),
    seed: int = typer.Option(0, '--seed', help='Master seed'),
    workers: int = typer.Option(settings.DEFAULT_WORKERS, '--workers', help='Worker processes'),
):
    """ Check the random-polynomial inequalities; exit code 1 if any of them fails """
    checks = [lemma] if lemma is not None else list(Check)
    with reporting_errors(ctx):
        if n < 1 or samples < 1:
            raise exc.E_INVALID_ARGUMENT('--n and --samples must be positive', name='n, samples')
        rows = [_run_check(check, n, samples, seed, workers) for check in checks]

    _print_table(('check', 'status', 'detail'), rows)
    if any(status == 'FAIL' for _, status, _ in rows):
        raise typer.Exit(exc.EXIT_FAILED)


@app.command('plot')
def plot_command(
    ctx: typer.Context,
    csv: Path = typer.Option(..., '--csv', help='CSV file written by `figure1` or `ensemble`'),
    out: Path = typer.Option(..., '--out', help='Where to write the plotting script; the figure goes next to it as .png'),
):
    """ Write a matplotlib script that plots mean_ratio against n with standard-error bars """
    with reporting_errors(ctx):
        ensemble.emit_plot_script(csv, out)
    typer.echo(str(out))


@contextmanager
def reporting_errors(ctx: typer.Context):
    """ Report application errors on stderr and exit with their exit code """
    try:
        with converting_unexpected_errors():
            yield
    except exc.BaseApplicationError as e:
        if isinstance(e, exc.F_UNEXPECTED_ERROR):
            logger.exception('Unexpected error')

        typer.echo(f'{e.name}: {e.error}', err=True)
        if e.fixit:
            typer.echo(f'Fix: {e.fixit}', err=True)
        if (ctx.obj or {}).get('verbose') and e.debug:
            typer.echo(json.dumps(e.debug, indent=2, default=str), err=True)
        raise typer.Exit(e.exit_code)


def _games(arg: str) -> list[SymmetricGame]:
    """ One game, or all games of the file given as @path """
    if not arg.startswith('@'):
        return [parse_game(arg)]

    path = Path(arg[1:])
    if not path.is_file():
        raise exc.E_INVALID_ARGUMENT.format('Game file {path} does not exist', name='game', path=str(path))
    return read_games(path)


def _int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(',') if item.strip()]
    except ValueError as e:
        raise exc.E_INVALID_ARGUMENT.format('Cannot parse {text!r} as a comma-separated list of integers', name='n-list', text=text) from e


def _run_check(check: Check, n: int, samples: int, seed: int, workers: int) -> tuple[str, str, str]:
    """ Run one check: (check, status, detail); status is 'ok', 'FAIL' or 'report' """
    if check is Check.MGF:
        c = combinatorics.weights(n).p
        reports = [bench.lemma1_check(c, lam) for lam in np.arange(-16, 17) * 0.25]
        held = sum(r.holds for r in reports)
        return check.value, _status(held == len(reports)), f'binomial weights n={n}: {held}/{len(reports)} values of λ in [-4, 4]'

    if check is Check.LEVEL:
        bits = sample_bit_matrix(n, seed, range(samples))
        ok = total = 0
        for row in bits:
            poly = bench.RademacherCosinePoly.make(n, np.where(row, -1, 1))
            for theta in (0.3, 0.6, 0.9):
                ok += bench.level_interval(poly, theta).ok
                total += 1
        return check.value, _status(ok == total), f'n={n}: {ok}/{total} arcs long enough, θ ∈ {{0.3, 0.6, 0.9}}'

    if check is Check.PALEY_ZYGMUND:
        # X = f², f = Σ p_m ε_m: E X = C and E X² = 3C² − 2D exactly
        p = np.asarray(combinatorics.weights(n).p)
        signs = np.where(sample_bit_matrix(n, seed, range(samples)), -1.0, 1.0)
        x = (signs @ p) ** 2
        C, D = math.fsum(p ** 2), math.fsum(p ** 4)
        A = min(C, math.fsum(x) / len(x))
        B = max(3 * C * C - 2 * D, math.fsum(x * x) / len(x))
        report = bench.paley_zygmund_check(x, A, B, 0.5)
        return check.value, _status(report.holds), f'n={n}, δ=0.5: frequency {report.empirical:.4f} vs bound {report.bound:.4f}'

    if check is Check.POWER_SUMS:
        held = sum(combinatorics.lemma5_check(k).holds for k in range(1, n + 1))
        return check.value, _status(held == n), f'{held}/{n} values of n hold'

    if check is Check.EVENTS:
        if n < 2:
            return check.value, 'report', 'skipped: needs n ≥ 2'
        f = bench.theorem_event_frequency(n, samples, seed, workers=workers)
        return check.value, 'report', (
            f'n={n}: P(M_n ≥ C1·norm) ≈ {f.freq_lower:.4f}, P(M_n ≤ C2·norm) ≈ {f.freq_upper:.4f}, '
            f'M_n/norm in [{f.min_ratio:.4f}, {f.max_ratio:.4f}], mean {f.mean_ratio:.4f}'
        )

    raise NotImplementedError(check)


def _status(ok: bool) -> str:
    return 'ok' if ok else 'FAIL'


def _print_table(header: tuple[str, ...], rows: list[tuple]):
    """ Tab-separated table; floats with 17 significant digits """
    typer.echo('\t'.join(header))
    for row in rows:
        typer.echo('\t'.join(
            settings.CSV_FLOAT_FORMAT % cell if isinstance(cell, float) else str(cell)
            for cell in row
        ))


if __name__ == '__main__':
    app()
