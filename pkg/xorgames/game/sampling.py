""" Deterministic, counter-based sampling of random games

The bit stream is SplitMix64: a published 64-bit mixing function with fixed constants,
so that any (master_seed, index, n) triple yields the same game on every platform and in every language.

Algorithm (all arithmetic modulo 2^64):

    γ        = 0x9E3779B97F4A7C15
    mix(z)   = z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
               z ^= z >> 27; z *= 0x94D049BB133111EB;
               z ^= z >> 31
    key      = master_seed XOR mix((index + 1)·γ)
    word(w)  = mix(key + w·γ),  w = 1, 2, ...
    G_j      = bit (j mod 64) of word(⌊j/64⌋ + 1)       (bit 0 = least significant)

That is, game `index` reads the SplitMix64 output sequence started from state `key`,
and bit j of the game is bit (j mod 64) of output word ⌈(j+1)/64⌉.
No state is shared between indices: sampling in parallel is race-free.
"""

from __future__ import annotations

from collections import abc

import numpy as np

from .model import SymmetricGame, SampleDescriptor


GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MUL_1 = 0xBF58476D1CE4E5B9
MIX_MUL_2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1


def mix64(z: int) -> int:
    """ SplitMix64 finalizer """
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX_MUL_1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_MUL_2) & MASK64
    return z ^ (z >> 31)


def stream_key(desc: SampleDescriptor) -> int:
    """ The SplitMix64 state a sample's bit stream starts from """
    return desc.master_seed ^ mix64((desc.index + 1) * GOLDEN_GAMMA)


def stream_words(desc: SampleDescriptor, count: int) -> list[int]:
    """ The first `count` 64-bit words of a sample's stream """
    key = stream_key(desc)
    return [mix64(key + w * GOLDEN_GAMMA) for w in range(1, count + 1)]


def sample_game(n: int, desc: SampleDescriptor) -> SymmetricGame:
    """ The game of n players determined by (master_seed, index): every G_j is a fair bit """
    words = stream_words(desc, n // 64 + 1)
    return SymmetricGame(n=n, bits=tuple(
        bool((words[j // 64] >> (j % 64)) & 1)
        for j in range(n + 1)
    ))


def sample_signs(n: int, desc: SampleDescriptor) -> np.ndarray:
    """ The Rademacher sign vector ε_0..ε_n of a sample: ε_j = (-1)^G_j """
    return sample_game(n, desc).signs


def sample_bit_matrix(n: int, master_seed: int, indices: abc.Iterable[int]) -> np.ndarray:
    """ Bits of many sampled games at once: row i is the game of indices[i]

    Produces exactly the bits of `sample_game()`, vectorized over indices.

    Returns:
        bool array of shape (len(indices), n+1)
    """
    idx = np.asarray(list(indices), dtype=np.uint64)
    words = n // 64 + 1
    j = np.arange(n + 1)

    # uint64 arithmetic wraps modulo 2^64
    with np.errstate(over='ignore'):
        key = np.uint64(master_seed) ^ _mix64_array((idx + np.uint64(1)) * np.uint64(GOLDEN_GAMMA))
        w = np.arange(1, words + 1, dtype=np.uint64)
        stream = _mix64_array(key[:, None] + w[None, :] * np.uint64(GOLDEN_GAMMA))
        bits = (stream[:, j // 64] >> (j % 64).astype(np.uint64)) & np.uint64(1)
    return bits.astype(bool)


def enumerate_bit_matrix(n: int) -> np.ndarray:
    """ All 2^(n+1) games of n players: row i has G_j = bit j of i """
    i = np.arange(1 << (n + 1), dtype=np.int64)
    j = np.arange(n + 1, dtype=np.int64)
    return ((i[:, None] >> j[None, :]) & 1).astype(bool)


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(MIX_MUL_1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(MIX_MUL_2)
    return z ^ (z >> np.uint64(31))
