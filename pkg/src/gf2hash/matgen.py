"""Seeded permutations and the sum-of-two-permutations singular matrix.

Randomness comes from SplitMix64 so that a ``(m, seed)`` pair maps to the same
matrix on every platform:

    state <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z     <- state
    z     <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2**64)
    z     <- (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2**64)
    out   <- z ^ (z >> 31)

Bounded draws use rejection sampling on the 64-bit output, so every index in
``[0, n)`` is equally likely.
"""
from __future__ import annotations

from typing import Sequence

from .gf2 import BitMatrix, is_permutation_matrix, mat_add

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        self.state = seed

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if n < 1:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


def shuffle(m: int, rng: SplitMix64) -> list[int]:
    if m < 1:
        raise ValueError("permutation size must be at least 1")
    a = list(range(1, m + 1))
    for i in range(m):
        j = i + rng.below(m - i)
        a[i], a[j] = a[j], a[i]
    return a


def fisher_yates(m: int, seed: int) -> list[int]:
    """Random permutation of ``1..m`` (one-based, like ``a_1 .. a_m``)."""
    return shuffle(m, SplitMix64(seed))


def check_permutation(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {list(p)!r}")


def perm_to_matrix(p: Sequence[int]) -> BitMatrix:
    """Matrix with a one at (p[j] - 1, j) for every column j."""
    check_permutation(p)
    m = len(p)
    rows = [0] * m
    for j, a in enumerate(p):
        rows[a - 1] |= 1 << (m - 1 - j)
    out = BitMatrix(m, m, tuple(rows))
    assert is_permutation_matrix(out)
    return out


def draw_permutation_pair(m: int, seed: int) -> tuple[list[int], list[int]]:
    """Two distinct permutations from one seeded stream.

    A second permutation equal to the first would make the sum the zero
    matrix, so it is redrawn from the continuing stream.
    """
    if m < 2:
        raise ValueError("need m >= 2 for two distinct permutations")
    rng = SplitMix64(seed)
    p1 = shuffle(m, rng)
    p2 = shuffle(m, rng)
    while p2 == p1:
        p2 = shuffle(m, rng)
    return p1, p2


def gen_noninvertible(m: int, seed: int) -> BitMatrix:
    p1, p2 = draw_permutation_pair(m, seed)
    return mat_add(perm_to_matrix(p1), perm_to_matrix(p2))
