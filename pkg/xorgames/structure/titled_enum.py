""" Titled Enum: a string Enum whose members carry a human-readable title

The CLI uses them as choices: the user types the value, the help text shows the title.
"""

from __future__ import annotations

from enum import Enum


class TitledEnum(str, Enum):
    """ A string Enum with both a value and a title

    Example:
        class Check(TitledEnum):
            MGF = '1', 'Rademacher MGF bounds'
            LEVEL = '3', 'Level-set interval length'
    """
    title: str

    def __new__(cls, value: str, title: str):
        v = str.__new__(cls, value)
        v._value_ = value
        v.title = title
        return v

    @classmethod
    def describe(cls) -> str:
        """ "value: title" for every member, for help texts """
        return '; '.join(f'{member.value}: {member.title}' for member in cls)
