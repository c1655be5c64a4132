""" The base class of the errors reported to the caller """

from typing import ClassVar, Optional, TypedDict


class ErrorObject(TypedDict):
    """ An application error as a dict: what `--verbose` prints """
    # `E_*` or `F_*`
    name: str
    # Title of the error class
    title: str
    exit_code: int

    # What went wrong; how to fix it
    error: str
    fixit: str

    info: dict
    # Only with debug info
    debug: Optional[dict]


class BaseApplicationError(Exception):
    """ An error the caller is meant to see

    Every error has two messages, `error` (what went wrong) and `fixit` (what to do about it),
    plus structured `info`. Keyword arguments named `debug_*` go into `debug` instead:
    the CLI only shows them with --verbose.

    Example:
        raise E_MALFORMED_GAME.format(
            'Game {text!r} has {got} bits, expected {expected}',
            text='2:01', got=2, expected=3,
        )
    """

    # 2: the caller can fix the input; 1: the computation has failed
    exit_code: ClassVar[int]

    title: ClassVar[str]

    error: str
    fixit: Optional[str]
    info: dict
    debug: dict

    def __init__(self, error: str, fixit: Optional[str] = None, **info):
        super().__init__(error)
        self.error = error
        # A class may provide a default fixit
        self.fixit = fixit or getattr(type(self), 'fixit', None)

        self.info, self.debug = {}, {}
        for key, value in info.items():
            if key.startswith('debug_'):
                self.debug[key.removeprefix('debug_')] = value
            else:
                self.info[key] = value

    @classmethod
    def format(cls, error: str, fixit: Optional[str] = None, **info):
        """ Same, with `{placeholders}` in both messages filled from **info """
        return cls(
            error.format(**info),
            None if fixit is None else fixit.format(**info),
            **info
        )

    @property
    def name(self) -> str:
        return type(self).__name__

    def dict(self, include_debug_info: bool) -> ErrorObject:
        return ErrorObject(
            name=self.name,
            title=self.title,
            exit_code=self.exit_code,
            error=self.error,
            fixit=str(self.fixit),
            info=self.info,
            debug=self.debug if include_debug_info else None,
        )
