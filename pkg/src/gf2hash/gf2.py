"""Dense bit-packed linear algebra over GF(2).

Vectors and matrix rows are packed into Python integers. Logical bit ``i`` of
an ``n``-bit value is integer bit ``n - 1 - i`` (most significant first), so a
block read from bytes with ``int.from_bytes(chunk, "big")`` is already in
logical order and digests render to hex without any bit reversal. Bits above
position ``n - 1`` are always zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_DIM = 1 << 16


def _check_dim(n: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n!r}")
    if n > MAX_DIM:
        raise ValueError(f"{what}={n} exceeds the supported maximum {MAX_DIM}")


@dataclass(frozen=True)
class BitVector:
    length: int
    value: int = 0

    def __post_init__(self) -> None:
        _check_dim(self.length, "length")
        if self.value < 0 or self.value >> self.length:
            raise ValueError("value has bits outside the vector length")

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        bits = list(bits)
        value = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"bit values must be 0 or 1, got {b!r}")
            value = (value << 1) | b
        return cls(len(bits), value)

    @classmethod
    def from_str(cls, s: str) -> BitVector:
        s = s.replace(" ", "")
        return cls(len(s), int(s, 2))

    def bits(self) -> list[int]:
        return [(self.value >> (self.length - 1 - i)) & 1 for i in range(self.length)]

    def weight(self) -> int:
        return self.value.bit_count()

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.value >> (self.length - 1 - i)) & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.value ^ other.value)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b")


@dataclass(frozen=True)
class BitMatrix:
    """Row-major GF(2) matrix; ``rows[i]`` is row ``i`` packed like a BitVector."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.nrows, "nrows")
        _check_dim(self.ncols, "ncols")
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def zeros(cls, n: int, ncols: int | None = None) -> BitMatrix:
        return cls(n, n if ncols is None else ncols, (0,) * n)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, tuple(1 << (n - 1 - i) for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> BitMatrix:
        rows = [BitVector.from_bits(r) for r in entries]
        if not rows:
            raise ValueError("matrix needs at least one row")
        ncols = rows[0].length
        if any(r.length != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(r.value for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> BitMatrix:
        """Build a matrix from packed columns (each an ``nrows``-bit integer)."""
        ncols = len(columns)
        rows = []
        for i in range(nrows):
            shift = nrows - 1 - i
            r = 0
            for c in columns:
                r = (r << 1) | ((c >> shift) & 1)
            rows.append(r)
        return cls(nrows, ncols, tuple(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(ij)
        return (self.rows[i] >> (self.ncols - 1 - j)) & 1

    def to_lists(self) -> list[list[int]]:
        return [BitVector(self.ncols, r).bits() for r in self.rows]

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.rows[i])

    def column(self, j: int) -> BitVector:
        shift = self.ncols - 1 - j
        v = 0
        for r in self.rows:
            v = (v << 1) | ((r >> shift) & 1)
        return BitVector(self.nrows, v)

    def row_weights(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def column_weights(self) -> list[int]:
        return [self.column(j).weight() for j in range(self.ncols)]

    def count_ones(self) -> int:
        return sum(self.row_weights())

    def __str__(self) -> str:
        return "\n".join(format(r, f"0{self.ncols}b") for r in self.rows)


def mat_vec(a: BitMatrix, v: BitVector) -> BitVector:
    """Return ``a @ v`` over GF(2); each output bit is parity(row AND v)."""
    if a.ncols != v.length:
        raise ValueError(f"dimension mismatch: {a.shape} @ {v.length}")
    x = v.value
    out = 0
    for r in a.rows:
        out = (out << 1) | ((r & x).bit_count() & 1)
    return BitVector(a.nrows, out)


def mat_add(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} + {b.shape}")
    return BitMatrix(a.nrows, a.ncols, tuple(x ^ y for x, y in zip(a.rows, b.rows)))


def _combine_rows(selector: int, width: int, rows: Sequence[int]) -> int:
    # XOR of rows[t] for every logical bit t set in a ``width``-bit selector
    acc = 0
    while selector:
        top = selector.bit_length() - 1
        acc ^= rows[width - 1 - top]
        selector ^= 1 << top
    return acc


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.ncols != b.nrows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    rows = tuple(_combine_rows(r, a.ncols, b.rows) for r in a.rows)
    return BitMatrix(a.nrows, b.ncols, rows)


def transpose(a: BitMatrix) -> BitMatrix:
    return BitMatrix(
        a.ncols, a.nrows, tuple(a.column(j).value for j in range(a.ncols))
    )


def mat_pow(a: BitMatrix, e: int) -> BitMatrix:
    if a.nrows != a.ncols:
        raise ValueError("mat_pow needs a square matrix")
    if e < 0:
        raise ValueError("negative exponent")
    result = BitMatrix.identity(a.nrows)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def _rref(a: BitMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns).

    Pivots are taken column by column from the left; among candidate rows
    the lowest index wins, which makes the output deterministic.
    """
    rows = list(a.rows)
    n = a.ncols
    pivots: list[int] = []
    top = 0
    for col in range(n):
        bit = 1 << (n - 1 - col)
        pivot = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[top], rows[pivot] = rows[pivot], rows[top]
        prow = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(col)
        top += 1
        if top == len(rows):
            break
    return rows[:top], pivots


def rank(a: BitMatrix) -> int:
    return len(_rref(a)[1])


def is_invertible(a: BitMatrix) -> bool:
    if a.nrows != a.ncols:
        raise ValueError("invertibility is only defined for square matrices")
    return rank(a) == a.nrows


def nullspace_basis(a: BitMatrix) -> list[BitVector]:
    """Basis of ``{v : a @ v = 0}``, one vector per free column, in column order."""
    reduced, pivots = _rref(a)
    n = a.ncols
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        free_bit = 1 << (n - 1 - free)
        v = free_bit
        # with the free variable set to 1, each pivot variable equals the
        # coefficient of the free column in its row
        for row, pcol in zip(reduced, pivots):
            if row & free_bit:
                v |= 1 << (n - 1 - pcol)
        basis.append(BitVector(n, v))
    return basis


def is_permutation_matrix(a: BitMatrix) -> bool:
    if a.nrows != a.ncols:
        return False
    if any(r.bit_count() != 1 for r in a.rows):
        return False
    seen = 0
    for r in a.rows:
        seen |= r
    # n rows of weight one covering n distinct columns
    return seen.bit_count() == a.ncols


class CompiledMatrix:
    """Table-driven ``mat_vec`` for hashing many vectors through one matrix.

    The input vector is cut into 8-bit chunks; for each chunk a 256-entry
    table holds the XOR of the matching columns. A product then costs
    ``ceil(n/8)`` lookups instead of ``n`` row parities.
    """

    CHUNK = 8

    def __init__(self, a: BitMatrix):
        self.matrix = a
        ncols = a.ncols
        cols = [a.column(j).value for j in range(ncols)]
        self.shifts: list[int] = []
        self.tables: list[list[int]] = []
        # chunk c covers integer bits [shift, shift + width)
        for shift in range(0, ncols, self.CHUNK):
            width = min(self.CHUNK, ncols - shift)
            table = [0] * (1 << width)
            for k in range(width):
                col = cols[ncols - 1 - (shift + k)]
                step = 1 << k
                for idx in range(step):
                    table[idx | step] = table[idx] ^ col
            self.shifts.append(shift)
            self.tables.append(table)
        self._pairs = list(zip(self.shifts, self.tables))

    def apply(self, x: int) -> int:
        acc = 0
        for shift, table in self._pairs:
            acc ^= table[(x >> shift) & 0xFF]
        return acc

    def __call__(self, v: BitVector) -> BitVector:
        if v.length != self.matrix.ncols:
            raise ValueError("dimension mismatch")
        return BitVector(self.matrix.nrows, self.apply(v.value))
