"""CBC-style hashing through a singular GF(2) matrix.

Model 1 chains ``H_i = P (B_i xor H_{i-1})`` from ``H_0 = 0`` and outputs
``H_N``. Model 2 runs the same chain but, after every even-indexed block,
replaces ``H_i`` with ``f_mix(H_i, H_{i-1})``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property

from . import codec
from .gf2 import BitMatrix, BitVector, CompiledMatrix, mat_mul, mat_vec, rank

DEFAULT_M = 128


class Model(enum.IntEnum):
    CHAIN = 1
    MIXED = 2


def _quarters(x: int, q: int) -> tuple[int, int, int, int]:
    mask = (1 << q) - 1
    return (x >> 3 * q) & mask, (x >> 2 * q) & mask, (x >> q) & mask, x & mask


def cross_quarters(x: int, m: int) -> int:
    """Rearrange quarters (Q1, Q2, Q3, Q4) of an m-bit value into (Q2, Q3, Q1, Q4)."""
    q = m // 4
    q1, q2, q3, q4 = _quarters(x, q)
    return (q2 << 3 * q) | (q3 << 2 * q) | (q1 << q) | q4


def f_mix(h: BitVector, h_prev: BitVector) -> BitVector:
    if h.length != h_prev.length:
        raise ValueError("length mismatch")
    if h.length % 4:
        raise ValueError(f"f_mix needs a length divisible by 4, got {h.length}")
    return BitVector(h.length, h.value ^ cross_quarters(h_prev.value, h.length))


def compress(p: BitMatrix, h: BitVector, b: BitVector) -> BitVector:
    return mat_vec(p, h ^ b)


@dataclass(frozen=True)
class HashParams:
    matrix: BitMatrix
    model: Model = Model.MIXED
    m: int = field(init=False)

    def __post_init__(self) -> None:
        p = self.matrix
        if p.nrows != p.ncols:
            raise ValueError(f"hash matrix must be square, got {p.shape}")
        object.__setattr__(self, "m", p.nrows)
        object.__setattr__(self, "model", Model(self.model))
        if rank(p) == p.nrows:
            raise ValueError("hash matrix must be singular")
        if self.model is Model.MIXED and self.m % 4:
            raise ValueError(f"model 2 needs m divisible by 4, got m={self.m}")

    @cached_property
    def compiled(self) -> CompiledMatrix:
        return CompiledMatrix(self.matrix)

    @cached_property
    def pair_map(self) -> BitMatrix:
        """Effect of two all-zero blocks on the chaining value.

        Model 1: ``P^2``. Model 2: ``x -> f_mix(P^2 x, P x)``.
        """
        p2 = mat_mul(self.matrix, self.matrix)
        if self.model is Model.CHAIN:
            return p2
        m = self.m
        cols = []
        for j in range(m):
            e = 1 << (m - 1 - j)
            a = self.compiled.apply(e)
            cols.append(self.compiled.apply(a) ^ cross_quarters(a, m))
        return BitMatrix.from_columns(cols, m)

    @cached_property
    def _pair_powers(self) -> list[CompiledMatrix]:
        return [CompiledMatrix(self.pair_map)]

    def apply_pair_power(self, x: int, n: int) -> int:
        """``pair_map^n`` applied to the packed vector ``x``."""
        powers = self._pair_powers
        k = 0
        while n:
            if k == len(powers):
                sq = powers[-1].matrix
                powers.append(CompiledMatrix(mat_mul(sq, sq)))
            if n & 1:
                x = powers[k].apply(x)
            n >>= 1
            k += 1
        return x


@dataclass(frozen=True)
class Digest:
    value: BitVector

    @property
    def m(self) -> int:
        return self.value.length

    def hex(self) -> str:
        return digest_to_hex(self)

    def bits(self) -> str:
        return str(self.value)

    def __xor__(self, other: Digest) -> Digest:
        return Digest(self.value ^ other.value)

    def __str__(self) -> str:
        return self.hex()


def digest_to_hex(d: Digest) -> str:
    """Lowercase hex of the MSB-first bytes; bit string when m is not a multiple of 8."""
    m = d.value.length
    if m % 8:
        return str(d.value)
    return d.value.value.to_bytes(m // 8, "big").hex()


class Hasher:
    """Incremental hasher with O(m) state.

    Full blocks are chained as soon as they arrive. Padding only touches the
    tail, except for the even-block fold, which XORs the tail into block 1.
    Since the whole pipeline is GF(2)-linear, that late change to block 1
    is added to the final state as ``pair_map^(N/2)`` applied to the folded
    bits.
    """

    def __init__(self, params: HashParams):
        self.params = params
        self.m = params.m
        self._apply = params.compiled.apply
        self._mixed = params.model is Model.MIXED
        self._h = 0
        self._nblocks = 0
        self._nbytes = 0
        self._tail_bytes = b""
        self._tail_bits = ""

    def _absorb(self, block: int) -> None:
        h = self._apply(block ^ self._h)
        self._nblocks += 1
        if self._mixed and not self._nblocks % 2:
            h ^= cross_quarters(self._h, self.m)
        self._h = h

    def update(self, data: bytes) -> Hasher:
        if not data:
            return self
        self._nbytes += len(data)
        m = self.m
        absorb = self._absorb
        if m % 8 == 0:
            mb = m // 8
            buf = self._tail_bytes + bytes(data) if self._tail_bytes else bytes(data)
            end = len(buf) - len(buf) % mb
            for i in range(0, end, mb):
                absorb(int.from_bytes(buf[i:i + mb], "big"))
            self._tail_bytes = buf[end:]
        else:
            bits = self._tail_bits + format(int.from_bytes(data, "big"), f"0{8 * len(data)}b")
            end = len(bits) - len(bits) % m
            for i in range(0, end, m):
                absorb(int(bits[i:i + m], 2))
            self._tail_bits = bits[end:]
        return self

    def _tail(self) -> tuple[int, int]:
        if self.m % 8 == 0:
            t = self._tail_bytes
            return int.from_bytes(t, "big"), 8 * len(t)
        t = self._tail_bits
        return (int(t, 2) if t else 0), len(t)

    def copy(self) -> Hasher:
        c = Hasher.__new__(Hasher)
        c.__dict__.update(self.__dict__)
        return c

    def digest(self) -> Digest:
        m = self.m
        tail, r = self._tail()
        q = self._nblocks
        st = self.copy()
        if q == 0:
            st._absorb(tail << (m - r))
            st._absorb(0)
        elif q % 2:
            st._absorb(tail << (m - r))
        elif r:
            delta = tail << (m - r)
            st._h ^= self.params.apply_pair_power(delta, q // 2)
        return Digest(BitVector(m, st._h))

    def hexdigest(self) -> str:
        return self.digest().hex()


def hash_message(params: HashParams, message: bytes) -> Digest:
    return Hasher(params).update(message).digest()


def hash_blocks(params: HashParams, blocks: list[BitVector]) -> Digest:
    """Chain already-padded blocks with the plain ``compress``/``f_mix`` operations."""
    if len(blocks) < 2 or len(blocks) % 2:
        raise ValueError("block count must be even and at least 2")
    h = BitVector.zeros(params.m)
    for i, b in enumerate(blocks, start=1):
        prev = h
        h = compress(params.matrix, h, b)
        if params.model is Model.MIXED and i % 2 == 0:
            h = f_mix(h, prev)
    return Digest(h)


def hash_bits(params: HashParams, stream: codec.BitStream) -> Digest:
    """Hash an arbitrary bit string (not necessarily byte aligned) via pad + split."""
    return hash_blocks(params, codec.split_blocks(codec.pad(stream, params.m), params.m))
