import pytest
from hypothesis import given
from hypothesis import strategies as st

from gf2hash.codec import (
    BitStream,
    bits_to_bytes,
    bytes_to_bits,
    join_blocks,
    pad,
    split_blocks,
)
from gf2hash.gf2 import BitVector
from gf2hash.reference import pad_bits

BLOCK_SIZES = st.sampled_from([4, 8, 16, 128])


@st.composite
def stream_and_m(draw):
    m = draw(BLOCK_SIZES)
    k = draw(st.integers(0, 10 * m))
    value = draw(st.integers(0, (1 << k) - 1)) if k else 0
    return BitStream(k, value), m


@pytest.mark.parametrize(
    "data, expected",
    [(b"\x00", "00000000"), (b"\x80", "10000000"), (b"\xa5", "10100101"), (b"", "")],
)
def test_bytes_to_bits(data, expected):
    s = bytes_to_bits(data)
    assert str(s) == expected
    assert len(s) == 8 * len(data)


def test_bits_to_bytes_requires_alignment():
    with pytest.raises(ValueError):
        bits_to_bytes(BitStream(7, 0))


@given(st.binary(max_size=64))
def test_bytes_round_trip(data):
    assert bits_to_bytes(bytes_to_bits(data)) == data


def test_pad_two_full_blocks_unchanged():
    s = BitStream.from_str("1011001110001111")
    assert pad(s, 8) == s


def test_pad_fold_q2_r4():
    bits = [(7 * i + 3) % 5 % 2 for i in range(20)]
    s = BitStream.from_bits(bits)
    out = pad(s, 8)
    assert len(out) == 16
    expected = [bits[t] ^ bits[16 + t] if t < 4 else bits[t] for t in range(16)]
    assert out.bits() == expected


def test_pad_single_block_is_zero_extended():
    s = BitStream.from_str("11010010")
    out = pad(s, 8)
    assert str(out) == "11010010" + "0" * 8


def test_pad_odd_blocks_with_remainder():
    s = BitStream.from_str("1" * 27)
    out = pad(s, 8)
    assert str(out) == "1" * 27 + "0" * 5


def test_pad_short_and_empty_inputs():
    assert str(pad(BitStream(0), 8)) == "0" * 16
    assert str(pad(BitStream.from_str("101"), 4)) == "1010" + "0000"


@given(stream_and_m())
def test_pad_block_count_even_and_at_least_two(sm):
    s, m = sm
    out = pad(s, m)
    assert len(out) % m == 0
    n = len(out) // m
    assert n % 2 == 0 and n >= 2


@given(stream_and_m())
def test_pad_output_lengths(sm):
    s, m = sm
    k = len(s)
    q, r = divmod(k, m)
    out = pad(s, m)
    if q == 0:
        assert len(out) == 2 * m
    elif q % 2 == 0:
        assert len(out) == k - r
    else:
        assert len(out) == m + k - r


@given(stream_and_m(), st.data())
def test_pad_is_linear(sm, data):
    x, m = sm
    y = BitStream(len(x), data.draw(st.integers(0, (1 << len(x)) - 1)) if len(x) else 0)
    assert pad(x ^ y, m) == pad(x, m) ^ pad(y, m)


@given(stream_and_m())
def test_pad_idempotent_on_even_aligned(sm):
    s, m = sm
    once = pad(s, m)
    assert pad(once, m) == once


@given(stream_and_m())
def test_pad_matches_list_reference(sm):
    s, m = sm
    assert pad(s, m).bits() == pad_bits(s.bits(), m)


def test_split_zero_stream():
    assert split_blocks(BitStream(16), 8) == [BitVector(8), BitVector(8)]


def test_split_bytes():
    b1, b2 = split_blocks(bytes_to_bits(b"\xa5\x0f"), 8)
    assert str(b1) == "10100101"
    assert str(b2) == "00001111"


def test_split_rejects_unpadded():
    for k in (8, 12, 24):
        with pytest.raises(ValueError):
            split_blocks(BitStream(k), 8)


@given(stream_and_m())
def test_split_round_trip(sm):
    s, m = sm
    padded = pad(s, m)
    blocks = split_blocks(padded, m)
    assert all(b.length == m for b in blocks)
    assert join_blocks(blocks) == padded
    for j, b in enumerate(blocks):
        assert b.bits() == padded.bits()[j * m:(j + 1) * m]
