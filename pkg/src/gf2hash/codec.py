"""Bytes to bits, the fold-or-extend padding rule, and block splitting."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gf2 import BitVector


@dataclass(frozen=True)
class BitStream:
    """``length`` bits b_0..b_{k-1}, packed MSB-first into ``value``."""

    length: int
    value: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative length")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("value has bits outside the stream length")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitStream:
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit values must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def from_str(cls, s: str) -> BitStream:
        s = s.replace(" ", "")
        return cls(len(s), int(s, 2) if s else 0)

    def bits(self) -> list[int]:
        return [int(c) for c in str(self)]

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> (self.length - 1 - i)) & 1

    def __xor__(self, other: BitStream) -> BitStream:
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitStream(self.length, self.value ^ other.value)

    def __add__(self, other: BitStream) -> BitStream:
        """Concatenation."""
        return BitStream(
            self.length + other.length, (self.value << other.length) | other.value
        )

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""


def bytes_to_bits(data: bytes) -> BitStream:
    return BitStream(8 * len(data), int.from_bytes(data, "big"))


def bits_to_bytes(s: BitStream) -> bytes:
    if s.length % 8:
        raise ValueError(f"bit length {s.length} is not a whole number of bytes")
    return s.value.to_bytes(s.length // 8, "big")


def pad(s: BitStream, m: int) -> BitStream:
    """Pad so that the stream splits into an even number (>= 2) of m-bit blocks.

    With ``q`` full blocks and ``r`` leftover bits: an odd ``q`` is zero-extended
    to ``q + 1`` blocks; an even ``q >= 2`` folds the ``r`` leftover bits into
    the first ``r`` bits (XOR) and drops them; ``q == 0`` is zero-extended to two
    blocks.
    """
    if m < 1:
        raise ValueError("block size must be positive")
    k = s.length
    q, r = divmod(k, m)
    if q == 0:
        return BitStream(2 * m, s.value << (2 * m - k))
    if q % 2:
        extra = m - r
        return BitStream(k + extra, s.value << extra)
    if r == 0:
        return s
    tail = s.value & ((1 << r) - 1)
    body = s.value >> r
    body ^= tail << (k - r - r)
    return BitStream(k - r, body)


def split_blocks(s: BitStream, m: int) -> list[BitVector]:
    """Cut a padded stream into column vectors; block j has bit i = b_{i + m*j}."""
    if m < 1:
        raise ValueError("block size must be positive")
    n, r = divmod(s.length, m)
    if r or n < 2 or n % 2:
        raise ValueError(
            f"stream of {s.length} bits is not padded to an even number of {m}-bit blocks"
        )
    text = str(s)
    return [BitVector(m, int(text[j * m:(j + 1) * m], 2)) for j in range(n)]


def join_blocks(blocks: Iterable[BitVector]) -> BitStream:
    out = BitStream(0)
    for b in blocks:
        out = out + BitStream(b.length, b.value)
    return out
