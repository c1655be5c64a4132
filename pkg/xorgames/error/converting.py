""" Turning arbitrary exceptions into application errors """

from collections import abc
from contextlib import contextmanager
from typing import Optional

import pydantic

from xorgames.error import exc


# Conversions tried in order; the first non-None result wins
Converter = abc.Callable[[Exception], Optional[exc.BaseApplicationError]]


@contextmanager
def converting_unexpected_errors(*converters: Converter):
    """ Let application errors through; convert every other exception

    * pydantic.ValidationError: the caller has given bad parameters, E_INVALID_ARGUMENT
    * an exception with a `default_application_error()` method: whatever it returns
    * anything else is a bug: F_UNEXPECTED_ERROR

    Args:
        converters: Extra conversions, tried before the default ones
    """
    try:
        yield
    except exc.BaseApplicationError:
        raise
    except Exception as e:
        raise convert_unexpected_error(e, *converters)


def convert_unexpected_error(error: Exception, *converters: Converter) -> exc.BaseApplicationError:
    for convert in (*converters, _from_validation_error, _from_custom_method):
        converted = convert(error)
        if converted is not None:
            return converted
    return exc.F_UNEXPECTED_ERROR.from_exception(error)


def _from_validation_error(error: Exception) -> Optional[exc.BaseApplicationError]:
    if isinstance(error, pydantic.ValidationError):
        return exc.E_INVALID_ARGUMENT.from_pydantic_validation_error(error)
    return None


def _from_custom_method(error: Exception) -> Optional[exc.BaseApplicationError]:
    method = getattr(error, 'default_application_error', None)
    return method() if callable(method) else None
