"""On-disk matrix format.

    offset  size             field
    0       4                magic b"GF2M"
    4       1                version (1)
    5       4                m, uint32 little-endian
    9       m * ceil(m/8)    rows, each packed MSB-first, zero padded
    ...     4                CRC32 of all preceding bytes, uint32 little-endian
"""
from __future__ import annotations

import os
import struct
import zlib
from dataclasses import dataclass, field

from .gf2 import MAX_DIM, BitMatrix, rank

MAGIC = b"GF2M"
VERSION = 1
_HEADER = struct.Struct("<4sBI")
_CRC = struct.Struct("<I")


class MatrixFileError(ValueError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


def file_size(m: int) -> int:
    return _HEADER.size + m * ((m + 7) // 8) + _CRC.size


def encode_matrix(p: BitMatrix) -> bytes:
    if p.nrows != p.ncols:
        raise ValueError("only square matrices are stored")
    m = p.nrows
    nb = (m + 7) // 8
    pad = 8 * nb - m
    body = _HEADER.pack(MAGIC, VERSION, m) + b"".join(
        (r << pad).to_bytes(nb, "big") for r in p.rows
    )
    return body + _CRC.pack(zlib.crc32(body))


@dataclass
class Inspection:
    """Outcome of checking a matrix file; ``ok`` iff ``problems`` is empty."""

    matrix: BitMatrix | None = None
    rank: int | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    @property
    def nullity(self) -> int | None:
        if self.matrix is None or self.rank is None:
            return None
        return self.matrix.nrows - self.rank


def inspect_bytes(data: bytes) -> Inspection:
    out = Inspection()
    if len(data) < _HEADER.size + _CRC.size:
        out.problems.append("truncated file")
        return out
    magic, version, m = _HEADER.unpack_from(data)
    if magic != MAGIC:
        out.problems.append("bad magic")
        return out
    if version != VERSION:
        out.problems.append(f"unsupported version {version}")
        return out
    if not 1 <= m <= MAX_DIM:
        out.problems.append(f"matrix size {m} out of range")
        return out
    if len(data) != file_size(m):
        out.problems.append(f"length mismatch: expected {file_size(m)} bytes, got {len(data)}")
        return out
    (stored,) = _CRC.unpack_from(data, len(data) - _CRC.size)
    if zlib.crc32(data[: -_CRC.size]) != stored:
        out.problems.append("checksum mismatch")

    nb = (m + 7) // 8
    pad = 8 * nb - m
    rows = []
    for i in range(m):
        start = _HEADER.size + i * nb
        raw = int.from_bytes(data[start:start + nb], "big")
        if raw & ((1 << pad) - 1):
            out.problems.append(f"nonzero padding bits in row {i}")
            return out
        rows.append(raw >> pad)
    p = BitMatrix(m, m, tuple(rows))
    out.matrix = p
    out.rank = rank(p)
    if out.rank == m:
        out.problems.append("matrix is invertible")
    if any(w not in (0, 2) for w in p.row_weights()):
        out.problems.append("row weight outside {0, 2}")
    if any(w not in (0, 2) for w in p.column_weights()):
        out.problems.append("column weight outside {0, 2}")
    return out


def decode_matrix(data: bytes) -> BitMatrix:
    result = inspect_bytes(data)
    if not result.ok:
        raise MatrixFileError(result.problems)
    assert result.matrix is not None
    return result.matrix


def write_matrix(path: str | os.PathLike, p: BitMatrix) -> None:
    with open(path, "wb") as f:
        f.write(encode_matrix(p))


def read_matrix(path: str | os.PathLike) -> BitMatrix:
    with open(path, "rb") as f:
        return decode_matrix(f.read())
