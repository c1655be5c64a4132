""" Every error xorgames reports

* `E_*`: errors. The input is wrong and the caller can fix it. Exit code 2.
* `F_*`: failures. The computation could not be completed. Exit code 1.
"""

from __future__ import annotations

import traceback
from collections import abc
from pathlib import Path
from typing import Any, Optional, TypeVar

import pydantic

from .base import BaseApplicationError


ExceptionT = TypeVar('ExceptionT', bound=BaseException)

EXIT_FAILED = 1
EXIT_USAGE = 2


# region Caller errors

class E_INVALID_ARGUMENT(BaseApplicationError):
    """ A parameter is out of its range

    Info:
        name: The parameter, or the comma-separated parameters, at fault
    """
    exit_code = EXIT_USAGE
    title = 'Invalid argument'
    fixit = 'Fix the values you have provided and try again'

    def __init__(self, error: str, fixit: Optional[str] = None, *, name: str, **info):
        super().__init__(error, fixit, name=name, **info)

    @classmethod
    def from_pydantic_validation_error(cls, validation_error: pydantic.ValidationError, **info) -> E_INVALID_ARGUMENT:
        """ One message per failed field; model-level failures are named after the model """
        errors = validation_error.errors()
        fields = ['.'.join(map(str, error['loc'])) for error in errors]
        messages = [f'{field}: {error["msg"]}' if field else error['msg'] for field, error in zip(fields, errors)]
        e = cls(
            '; '.join(messages),
            name=', '.join(filter(None, fields)) or validation_error.title,
            debug_errors=errors,
            **info
        )
        return exception_from(e, validation_error)


class E_MALFORMED_GAME(BaseApplicationError):
    """ A game string does not follow the canonical "n:bits" grammar

    Info:
        text: The offending text
    """
    exit_code = EXIT_USAGE
    title = 'Malformed game'
    fixit = 'A game of n ≥ 1 players is written as "n:" followed by n+1 characters 0 or 1, e.g. "2:001"'


class E_DIMENSION_MISMATCH(BaseApplicationError):
    """ Two objects that must describe the same number of players do not

    Info:
        expected: The player count of the first object
        got: The player count of the second one
    """
    exit_code = EXIT_USAGE
    title = 'Dimension mismatch'


class E_FLOAT_RANGE(BaseApplicationError):
    """ Double precision cannot represent the requested quantity

    Reported when normalized weights 2^-n would underflow.

    Info:
        n: The requested player count
        limit: The largest supported player count
    """
    exit_code = EXIT_USAGE
    title = 'Outside of the floating-point range'


class E_TOO_LARGE(BaseApplicationError):
    """ The requested exhaustive computation is too large

    Info:
        n: The requested size
        limit: The largest supported size
    """
    exit_code = EXIT_USAGE
    title = 'Problem too large'


class E_DEGENERATE_POLYNOMIAL(BaseApplicationError):
    """ The polynomial has no non-zero coefficient """
    exit_code = EXIT_USAGE
    title = 'Degenerate polynomial'


class E_PRECONDITION_VIOLATED(BaseApplicationError):
    """ The inputs violate a precondition of the inequality being checked

    Info:
        condition: The failed condition, human-readable
    """
    exit_code = EXIT_USAGE
    title = 'Precondition violated'


class E_MISSING_COLUMNS(BaseApplicationError):
    """ A CSV file lacks some of the documented columns

    Info:
        path: The CSV file
        missing: The names of the missing columns
    """
    exit_code = EXIT_USAGE
    title = 'Missing columns'
    fixit = 'Regenerate the file with the `figure1` or `ensemble --csv` command'

# endregion


# region Failures

class F_FAIL(BaseApplicationError):
    """ The computation could not be completed """
    exit_code = EXIT_FAILED
    title = 'Computation failed'


class F_TOLERANCE_NOT_REACHED(F_FAIL):
    """ The certified optimizer could not close the enclosure gap

    This is a diagnostic: it is not expected for polynomials of supported degree.

    Info:
        tol: The requested tolerance
        gap: The gap reached
        grid_size: The effective grid resolution at which the optimizer gave up
    """
    title = 'Tolerance not reached'


class F_UNEXPECTED_ERROR(F_FAIL):
    """ A Python exception nobody expected: a bug

    Debug info:
        errors: The chain of causes, each with a short traceback
    """
    title = 'Unexpected error'
    fixit = 'This is a bug. Please rerun with --verbose and report the output'

    @classmethod
    def from_exception(cls, unexpected: BaseException, error: Optional[str] = None, **info) -> F_UNEXPECTED_ERROR:
        e = cls(
            error or str(unexpected) or type(unexpected).__name__,
            debug_errors=[_describe(cause) for cause in _cause_chain(unexpected)],
            **info
        )
        return exception_from(e, unexpected)

# endregion


def export_error_catalog(namespace: dict[str, Any]) -> list[type[BaseApplicationError]]:
    """ Every concrete application error class in the namespace, e.g. `vars(exc)` """
    return [
        value
        for name, value in namespace.items()
        if isinstance(value, type) and issubclass(value, BaseApplicationError)
        and not name.startswith('_') and value is not BaseApplicationError
    ]


def exception_from(new_exception: ExceptionT, cause: BaseException) -> ExceptionT:
    """ `raise new_exception from cause`, without raising """
    new_exception.__cause__ = cause
    return new_exception.with_traceback(cause.__traceback__)


def _cause_chain(e: Optional[BaseException], limit: int = 100) -> abc.Iterator[BaseException]:
    while e is not None and limit > 0:
        yield e
        e, limit = e.__cause__, limit - 1


def _describe(e: BaseException) -> dict:
    return {
        'type': type(e).__name__,
        'msg': str(e),
        # "dir/file.py:function"
        'trace': [
            '/'.join(Path(frame.filename).parts[-2:]) + f':{frame.name}'
            for frame in traceback.extract_tb(e.__traceback__)
        ],
    }
