import itertools
import random

import numpy as np
import pytest
from hypothesis import strategies as st

from gf2hash.gf2 import BitMatrix, BitVector


def to_np(a: BitMatrix) -> np.ndarray:
    return np.array(a.to_lists(), dtype=np.int64)


def from_np(a: np.ndarray) -> BitMatrix:
    return BitMatrix.from_lists((np.asarray(a) % 2).astype(int).tolist())


def all_perm_matrices(n):
    for p in itertools.permutations(range(n)):
        rows = [[0] * n for _ in range(n)]
        for j, i in enumerate(p):
            rows[i][j] = 1
        yield BitMatrix.from_lists(rows)


def random_matrix(rng: random.Random, n: int, ncols: int | None = None) -> BitMatrix:
    ncols = n if ncols is None else ncols
    return BitMatrix(n, ncols, tuple(rng.getrandbits(ncols) for _ in range(n)))


@st.composite
def square_matrices(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return BitMatrix(n, n, tuple(rows))


@st.composite
def matrix_and_vectors(draw, max_n=64):
    n = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    u = draw(st.integers(0, (1 << n) - 1))
    v = draw(st.integers(0, (1 << n) - 1))
    return BitMatrix(n, n, tuple(rows)), BitVector(n, u), BitVector(n, v)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record a PASS/FAIL line for the acceptance summary."""

    def record(number: int, ok: bool, detail: str) -> None:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}")
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
