"""Slow bit-list reference implementation.

Works on plain lists of 0/1 with explicit nested loops and shares no code
with the packed implementation, so the two can check each other.
"""
from __future__ import annotations


def message_bits(data: bytes) -> list[int]:
    bits = []
    for byte in data:
        for j in range(7, -1, -1):
            bits.append((byte >> j) & 1)
    return bits


def pad_bits(b: list[int], m: int) -> list[int]:
    b = list(b)
    k = len(b)
    q, r = (k - k % m) // m, k % m
    if q == 0:
        return b + [0] * (2 * m - k)
    if q % 2 == 0:
        for t in range(r):
            b[t] = (b[t] + b[k - r + t]) % 2
        return b[: k - r]
    return b + [0] * (m - r)


def f_function(h: list[int], hp: list[int]) -> list[int]:
    m = len(h)
    q = m // 4
    out = list(h)
    for i in range(0, q):
        out[i] = (h[i] + hp[i + q]) % 2
    for i in range(q, 2 * q):
        out[i] = (h[i] + hp[i + q]) % 2
    for i in range(2 * q, 3 * q):
        out[i] = (h[i] + hp[i - 2 * q]) % 2
    for i in range(3 * q, m):
        out[i] = (h[i] + hp[i]) % 2
    return out


def reference_hash(p: list[list[int]], data_bits: list[int], model: int) -> list[int]:
    m = len(p)
    b = pad_bits(data_bits, m)
    n = len(b) // m
    # M'[i][j] = b[i + m*j]: column j is block j+1
    mp = [[b[i + m * j] for j in range(n)] for i in range(m)]
    h = [0] * m
    for j in range(n):
        prev = list(h)
        blk = [(mp[i][j] + h[i]) % 2 for i in range(m)]
        new = [0] * m
        for k in range(m):
            s = 0
            for t in range(m):
                s = (p[k][t] * blk[t] + s) % 2
            new[k] = s
        h = new
        if model == 2 and (j + 1) % 2 == 0:
            h = f_function(h, prev)
    return h
