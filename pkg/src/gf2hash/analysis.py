"""Collisions from the kernel of P, linearity checks, and avalanche statistics."""
from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass

from .digest import Digest, HashParams, hash_message
from .gf2 import nullspace_basis

IDEAL_FLIP_FRACTION = 0.5


class CollisionError(RuntimeError):
    pass


@dataclass(frozen=True)
class CollisionPair:
    msg_a: bytes
    msg_b: bytes
    digest: Digest

    def __post_init__(self) -> None:
        if self.msg_a == self.msg_b:
            raise ValueError("collision messages must differ")
        if len(self.msg_a) != len(self.msg_b):
            raise ValueError("collision messages must have equal length")


def construct_collision(params: HashParams, base_msg: bytes) -> CollisionPair:
    """Second message with the same digest, built by XORing a kernel vector of P
    into the last full block of ``base_msg``.

    A change ``v`` in block ``B_i`` changes ``H_i`` by ``P v = 0``, and model 2's
    mixing only ever reads chaining values, so nothing downstream moves.
    ``base_msg`` must be a whole number of m-bit blocks, which keeps padding
    from folding the tail back into block 1.
    """
    m = params.m
    k = 8 * len(base_msg)
    if k < m or k % m:
        raise ValueError(
            f"base message of {k} bits must be a positive multiple of m={m} bits"
        )
    target = hash_message(params, base_msg)
    base_int = int.from_bytes(base_msg, "big")
    for v in nullspace_basis(params.matrix):
        # the last message block occupies the low m bits of the stream
        other = (base_int ^ v.value).to_bytes(len(base_msg), "big")
        if other != base_msg and hash_message(params, other) == target:
            return CollisionPair(base_msg, other, target)
    raise CollisionError("no kernel vector produced a verified collision")


def linear_agreements(
    params: HashParams, trials: int, length: int, seed: int = 0
) -> int:
    """Number of random equal-length pairs with hash(x ^ y) == hash(x) ^ hash(y)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    ok = 0
    for _ in range(trials):
        x = rng.randbytes(length)
        y = rng.randbytes(length)
        z = bytes(a ^ b for a, b in zip(x, y))
        if hash_message(params, z) == hash_message(params, x) ^ hash_message(params, y):
            ok += 1
    return ok


def linearity_check(params: HashParams, trials: int, length: int, seed: int = 0) -> bool:
    return linear_agreements(params, trials, length, seed) == trials


@dataclass(frozen=True)
class AvalancheReport:
    m: int
    trials: int
    mean_flip_fraction: float
    per_bit_flip_rates: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if len(self.per_bit_flip_rates) != self.m:
            raise ValueError("need one flip rate per output bit")
        if not all(0.0 <= r <= 1.0 for r in (self.mean_flip_fraction, *self.per_bit_flip_rates)):
            raise ValueError("rates must lie in [0, 1]")

    def to_text(self) -> str:
        rates = self.per_bit_flip_rates
        lines = [
            f"m: {self.m}",
            f"trials: {self.trials}",
            f"mean_flip_fraction: {self.mean_flip_fraction:.6f}",
            f"ideal_flip_fraction: {IDEAL_FLIP_FRACTION:.6f}",
            f"min_bit_rate: {min(rates):.6f}",
            f"max_bit_rate: {max(rates):.6f}",
            f"never_flipped_bits: {sum(1 for r in rates if r == 0.0)}",
        ]
        return "\n".join(lines)

    def to_json(self) -> str:
        d = asdict(self)
        d["per_bit_flip_rates"] = list(self.per_bit_flip_rates)
        d["ideal_flip_fraction"] = IDEAL_FLIP_FRACTION
        return json.dumps(d)


def avalanche(
    params: HashParams,
    trials: int,
    length: int,
    seed: int = 0,
    bit_range: tuple[int, int] | None = None,
) -> AvalancheReport:
    """Flip one random input bit per trial and measure how many digest bits change.

    ``bit_range`` restricts the flipped position to ``[lo, hi)`` bit indices.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if length < 1:
        raise ValueError("length must be >= 1")
    lo, hi = bit_range if bit_range is not None else (0, 8 * length)
    if not 0 <= lo < hi <= 8 * length:
        raise ValueError(f"bad bit range {bit_range!r} for {length} bytes")
    m = params.m
    rng = random.Random(seed)
    counts = [0] * m
    total = 0
    for _ in range(trials):
        msg = bytearray(rng.randbytes(length))
        pos = rng.randrange(lo, hi)
        d0 = hash_message(params, bytes(msg))
        msg[pos // 8] ^= 0x80 >> (pos % 8)
        d1 = hash_message(params, bytes(msg))
        diff = (d0 ^ d1).value
        total += diff.weight()
        for i, bit in enumerate(diff.bits()):
            counts[i] += bit
    return AvalancheReport(
        m=m,
        trials=trials,
        mean_flip_fraction=total / (trials * m),
        per_bit_flip_rates=tuple(c / trials for c in counts),
    )
