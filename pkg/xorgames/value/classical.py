""" Classical value of a symmetric XOR game

A deterministic strategy of player i is y_i = a_i ⊕ b_i·x_i.
Up to a relabelling of the players, only two things matter:

* k, the number of players with b_i = 1 (they answer with their input)
* c = ⊕ a_i, the constant part of the output parity

The bias of such a strategy is (−1)^c·B_k with

    B_k = 2^-n · Σ_j (−1)^{G_j} K_k(j),     K_k(j) = Σ_i (−1)^i C(k,i) C(n−k, j−i)

and the classical value is max_k |B_k|.
Shared randomness is a mixture of deterministic strategies and cannot do better.

K_k(j) is the coefficient of x^j in (1−x)^k (1+x)^(n−k): all sums are done in exact integers,
with a single division by 2^n at the end.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import pydantic as pd

from xorgames.combinatorics import binomial_row
from xorgames.config import settings
from xorgames.error import exc
from xorgames.game import SymmetricGame


class BiasProfile(pd.BaseModel):
    """ Biases B_0..B_n of the (k, c=0) strategy classes """
    model_config = pd.ConfigDict(frozen=True)

    n: int = pd.Field(ge=1)
    biases: tuple[float, ...]

    @pd.model_validator(mode='after')
    def _check_biases(self):
        assert len(self.biases) == self.n + 1, 'one bias per k = 0..n'
        assert all(abs(b) <= 1 for b in self.biases), '|B_k| ≤ 1'
        return self

    @property
    def value(self) -> float:
        return max(abs(b) for b in self.biases)


class ClassicalValue(pd.BaseModel):
    """ The best deterministic strategy class """
    model_config = pd.ConfigDict(frozen=True)

    # max_k |B_k|
    value: float = pd.Field(ge=0, le=1)

    # Number of players who answer with their input
    best_k: int = pd.Field(ge=0)

    # Parity of the constant parts: 1 iff B_{best_k} < 0
    best_c: int = pd.Field(ge=0, le=1)


def krawtchouk_bias(g: SymmetricGame, k: int) -> float:
    """ B_k: the bias of k input-copying players with constant parity 0 """
    if not 0 <= k <= g.n:
        raise exc.E_INVALID_ARGUMENT.format('k={k} is outside of [0, {n}]', name='k', k=k, n=g.n)

    K = krawtchouk_matrix(g.n)
    numerator = sum(int(s) * K[k][j] for j, s in enumerate(_int_signs(g)))
    return numerator / (1 << g.n)


def bias_profile(g: SymmetricGame) -> BiasProfile:
    """ All biases B_0..B_n """
    return BiasProfile(
        n=g.n,
        biases=tuple(num / (1 << g.n) for num in _bias_numerators(g)),
    )


def classical_value(g: SymmetricGame) -> ClassicalValue:
    """ max_k |B_k|; ties go to the smallest k

    Ties are detected on the exact integer numerators.
    """
    numerators = _bias_numerators(g)
    best = max(abs(num) for num in numerators)
    best_k = next(k for k, num in enumerate(numerators) if abs(num) == best)
    return ClassicalValue(
        value=best / (1 << g.n),
        best_k=best_k,
        best_c=int(numerators[best_k] < 0),
    )


def brute_force_value(g: SymmetricGame) -> float:
    """ Classical value by enumeration of every deterministic strategy

    Strategies (a, b) with the same b and the same parity ⊕a_i have the same bias, so it is enough to compute,
    for every b ∈ {0,1}^n, the sum over all 2^n inputs x of (−1)^{G_|x| ⊕ b·x}.
    These sums are the Walsh–Hadamard transform of x ↦ (−1)^{G_|x|}.

    Raises:
        exc.E_TOO_LARGE: n > settings.BRUTE_FORCE_MAX_N
    """
    n = g.n
    if n > settings.BRUTE_FORCE_MAX_N:
        raise exc.E_TOO_LARGE.format(
            'Cannot enumerate the 4^{n} strategies of {n} players',
            'Use n ≤ {limit}, or `classical_value()`',
            n=n, limit=settings.BRUTE_FORCE_MAX_N,
        )

    # Hamming weight of every input
    x = np.arange(1 << n)
    weight = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        weight += (x >> i) & 1

    signs = np.where(np.asarray(g.bits, dtype=bool)[weight], -1, 1).astype(np.int64)
    totals = _walsh_hadamard(signs, n)
    return int(np.abs(totals).max()) / (1 << n)


@lru_cache(maxsize=32)
def krawtchouk_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """ K_k(j) for k, j = 0..n, exact

    Row 0 is the binomial row (1+x)^n; row k+1 is row k divided by (1+x) and multiplied by (1−x).
    """
    row = list(binomial_row(n).coefficients)
    rows = [tuple(row)]
    for _ in range(n):
        # Divide by (1+x): b_j = a_j − b_{j−1}
        quotient = []
        carry = 0
        for a in row[:-1]:
            carry = a - carry
            quotient.append(carry)

        # Multiply by (1−x)
        row = [q - p for q, p in zip(quotient + [0], [0] + quotient)]
        rows.append(tuple(row))
    return tuple(rows)


def _int_signs(g: SymmetricGame) -> list[int]:
    return [-1 if bit else 1 for bit in g.bits]


def _bias_numerators(g: SymmetricGame) -> list[int]:
    """ 2^n·B_k for k = 0..n, exact """
    K = np.array(krawtchouk_matrix(g.n), dtype=object)
    signs = np.array(_int_signs(g), dtype=object)
    return [int(v) for v in K.dot(signs)]


def _walsh_hadamard(values: np.ndarray, n: int) -> np.ndarray:
    """ Unnormalized fast Walsh–Hadamard transform of a vector of length 2^n """
    h = values
    for i in range(n):
        h = h.reshape(-1, 2, 1 << i)
        h = np.stack((h[:, 0, :] + h[:, 1, :], h[:, 0, :] - h[:, 1, :]), axis=1)
    return h.reshape(-1)
