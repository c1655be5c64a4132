""" Errors the caller is meant to see

`exc` lists them: `E_*` errors are bad input (exit code 2), `F_*` failures are computations
that could not complete (exit code 1). Any other exception escaping the package is a bug:
the CLI wraps it into an F_UNEXPECTED_ERROR with `converting_unexpected_errors()`.
"""

from .base import BaseApplicationError, ErrorObject
from . import exc
