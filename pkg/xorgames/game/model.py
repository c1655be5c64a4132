""" Symmetric XOR games and their canonical text form

A symmetric XOR game of n players is a list of n+1 bits G_0..G_n:
when j players receive the input 1, the players win iff the parity of their outputs equals G_j.

Text form: "n:b_0b_1…b_n", G_0 first. The CHSH game is "2:001".
A game file holds one game per line; lines starting with '#' are comments.
"""

from __future__ import annotations

import re
from collections import abc
from pathlib import Path
from typing import Optional, Union

import numpy as np
import pydantic as pd

from xorgames.error import exc


class SymmetricGame(pd.BaseModel):
    """ The winning condition G = (G_0, ..., G_n) of an n-player symmetric XOR game """
    model_config = pd.ConfigDict(frozen=True)

    # Number of players
    n: int = pd.Field(ge=1)

    # G_0..G_n
    bits: tuple[bool, ...]

    @pd.model_validator(mode='after')
    def _check_length(self):
        assert len(self.bits) == self.n + 1, 'a game of n players has n+1 bits'
        return self

    @classmethod
    def from_bits(cls, bits: abc.Iterable[Union[bool, int]]) -> SymmetricGame:
        """ Make a game from its bit list; n is implied by the length """
        bits = tuple(bool(b) for b in bits)
        return cls(n=len(bits) - 1, bits=bits)

    @property
    def signs(self) -> np.ndarray:
        """ (-1)^G_j as a float array """
        return 1.0 - 2.0 * np.fromiter(self.bits, dtype=float, count=self.n + 1)

    def complement(self) -> SymmetricGame:
        """ Flip every bit: the same game with the opposite output parity """
        return SymmetricGame(n=self.n, bits=tuple(not b for b in self.bits))

    def reversed(self) -> SymmetricGame:
        """ G_j → G_{n-j}: the same game with the inputs negated """
        return SymmetricGame(n=self.n, bits=self.bits[::-1])

    def __str__(self):
        return format_game(self)


class SampleDescriptor(pd.BaseModel):
    """ Reproducibility contract: (master_seed, index) fully determines a sampled game """
    model_config = pd.ConfigDict(frozen=True)

    master_seed: int = pd.Field(ge=0, lt=2 ** 64)
    index: int = pd.Field(ge=0, lt=2 ** 64)


def format_game(g: SymmetricGame) -> str:
    """ Canonical text: "n:b_0b_1…b_n" """
    return f'{g.n}:' + ''.join('1' if b else '0' for b in g.bits)


def parse_game(text: str) -> SymmetricGame:
    """ Parse the canonical text form

    Raises:
        exc.E_MALFORMED_GAME: wrong grammar, n < 1, or the number of bits is not n+1
    """
    m = _GAME_RX.fullmatch(text.strip())
    if m is None:
        raise exc.E_MALFORMED_GAME.format('Cannot parse game {text!r}', text=text)

    n, bits = int(m['n']), m['bits']
    if n < 1:
        raise exc.E_MALFORMED_GAME.format('Game {text!r}: at least one player is required', text=text)
    if len(bits) != n + 1:
        raise exc.E_MALFORMED_GAME.format(
            'Game {text!r} has {got} bits, expected n+1={expected}',
            text=text, got=len(bits), expected=n + 1,
        )
    return SymmetricGame(n=n, bits=tuple(c == '1' for c in bits))


def read_games(path: Union[str, Path]) -> list[SymmetricGame]:
    """ Read a game file: UTF-8, one game per line, '#' comment lines, blank lines ignored

    Raises:
        exc.E_MALFORMED_GAME: a line fails to parse; `info.line` tells which one
    """
    games = []
    for lineno, line in enumerate(Path(path).read_text(encoding='utf-8').splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue

        try:
            games.append(parse_game(line))
        except exc.E_MALFORMED_GAME as e:
            raise exc.E_MALFORMED_GAME(f'{path}:{lineno}: {e.error}', line=lineno, **e.info) from e
    return games


def write_games(path: Union[str, Path], games: abc.Iterable[SymmetricGame], *, comment: Optional[str] = None):
    """ Write a game file, optionally starting with a comment line """
    lines = [f'# {comment}'] if comment else []
    lines.extend(format_game(g) for g in games)
    Path(path).write_text('\n'.join(lines) + '\n', encoding='utf-8')


_GAME_RX = re.compile(r'(?P<n>\d+):(?P<bits>[01]*)', re.ASCII)
