"""Timing the matrix hash against hashlib's SHA-256 on identical buffers."""
from __future__ import annotations

import hashlib
import json
import logging
import random
import timeit
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

from .digest import Hasher, HashParams

log = logging.getLogger(__name__)

# one timed batch must run at least this long before we trust the clock
MIN_BATCH_SECONDS = 2e-3

# 256 bit .. 512 Kibit, doubling
DEFAULT_SIZES_BITS = (
    256, 512, 1024, 2048, 4096, 8192, 16384, 32768, 65536, 131072, 262144, 524288,
)


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...] = tuple(b // 8 for b in DEFAULT_SIZES_BITS)
    reps: int = 5
    seed: int = 0


@dataclass(frozen=True)
class BenchRow:
    input_size: int
    model_time: float
    sha2_time: float

    def __post_init__(self) -> None:
        if self.input_size <= 0 or self.model_time <= 0 or self.sha2_time <= 0:
            raise ValueError("sizes and times must be positive")

    @property
    def model_throughput(self) -> float:
        return self.input_size / self.model_time

    @property
    def sha2_throughput(self) -> float:
        return self.input_size / self.sha2_time

    def as_dict(self) -> dict:
        d = asdict(self)
        d["input_bits"] = 8 * self.input_size
        d["model_throughput"] = self.model_throughput
        d["sha2_throughput"] = self.sha2_throughput
        return d


def make_buffer(size: int, seed: int) -> bytes:
    return random.Random(f"{seed}:{size}").randbytes(size)


def time_call(fn: Callable[[], object], reps: int) -> tuple[float, int]:
    """Best per-call time over ``reps`` batches, and the batch size used.

    The batch size grows tenfold until one batch clears ``MIN_BATCH_SECONDS``.
    """
    timer = timeit.Timer(fn)
    number = 1
    while timer.timeit(number) < MIN_BATCH_SECONDS:
        number *= 10
    return min(timer.repeat(repeat=reps, number=number)) / number, number


def run_bench(params: HashParams, sizes: Sequence[int], reps: int, seed: int = 0) -> list[BenchRow]:
    if not sizes:
        raise ValueError("need at least one input size")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    # compile lookup tables before timing
    Hasher(params).update(b"\0" * (params.m // 4 + 1)).digest()
    rows = []
    raised = []
    for size in sizes:
        if size <= 0:
            raise ValueError(f"input size must be positive, got {size}")
        buf = make_buffer(size, seed)
        # warm the fold-correction cache for this block count
        Hasher(params).update(buf).digest()
        model_t, n1 = time_call(lambda: Hasher(params).update(buf).digest(), reps)
        sha_t, n2 = time_call(lambda: hashlib.sha256(buf).digest(), reps)
        if n1 > 1 or n2 > 1:
            raised.append(size)
        rows.append(BenchRow(size, model_t, sha_t))
    if raised:
        log.warning(
            "timer too coarse for a single call at sizes %s; timed batches of calls instead",
            ", ".join(map(str, raised)),
        )
    return rows


def crossover(rows: Sequence[BenchRow]) -> int | None:
    """Smallest measured size from which SHA-256 is faster at every larger size.

    None when the model is still faster at the largest measured size.
    """
    ordered = sorted(rows, key=lambda r: r.input_size)
    point = None
    for row in reversed(ordered):
        if row.sha2_time < row.model_time:
            point = row.input_size
        else:
            break
    return point


def scaling_ratios(rows: Sequence[BenchRow]) -> list[float]:
    ordered = sorted(rows, key=lambda r: r.input_size)
    return [b.model_time / a.model_time for a, b in zip(ordered, ordered[1:])]


def format_table(rows: Sequence[BenchRow]) -> str:
    head = f"{'size (bit)':>12} {'size (B)':>10} {'model (ms)':>12} {'sha256 (ms)':>12} {'model MB/s':>11} {'sha256 MB/s':>12}"
    lines = [head, "-" * len(head)]
    for r in rows:
        lines.append(
            f"{8 * r.input_size:>12} {r.input_size:>10} {1e3 * r.model_time:>12.4f} "
            f"{1e3 * r.sha2_time:>12.4f} {r.model_throughput / 1e6:>11.2f} {r.sha2_throughput / 1e6:>12.2f}"
        )
    cx = crossover(rows)
    if cx is None:
        lines.append("crossover: none (model still faster at the largest size)")
    elif cx == min(r.input_size for r in rows):
        lines.append(f"crossover: <= {cx} B (SHA-256 faster at every measured size)")
    else:
        lines.append(f"crossover: {cx} B ({8 * cx} bit)")
    return "\n".join(lines)


def rows_to_json(rows: Sequence[BenchRow], **meta) -> str:
    return json.dumps(
        {**meta, "crossover_bytes": crossover(rows), "rows": [r.as_dict() for r in rows]},
        indent=2,
    )
