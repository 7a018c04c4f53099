"""Exit criteria, one test per criterion, each at its pinned tolerance.

Run with ``pytest tests/test_acceptance.py`` to get the PASS/FAIL summary.
"""
import itertools
import random
import time


from conftest import all_perm_matrices
from gf2hash import bench
from gf2hash.analysis import CollisionError, construct_collision
from gf2hash.cli import main
from gf2hash.codec import BitStream, pad
from gf2hash.digest import HashParams, Model, compress, hash_blocks, hash_message
from gf2hash.gf2 import BitMatrix, BitVector, is_invertible, is_permutation_matrix, mat_add, mat_pow, mat_vec, rank
from gf2hash.matfile import MatrixFileError, decode_matrix, encode_matrix
from gf2hash.matgen import fisher_yates, gen_noninvertible
from gf2hash.reference import message_bits, reference_hash

CHI2_999_DF23 = 49.7282  # scipy.stats.chi2.ppf(0.999, 23)


def test_c01_weight_m_matrix_invertible_iff_permutation(criterion):
    t0 = time.perf_counter()
    agree = total = 0
    for ones in itertools.combinations(range(9), 3):
        rows = [0, 0, 0]
        for pos in ones:
            rows[pos // 3] |= 1 << (2 - pos % 3)
        a = BitMatrix(3, 3, tuple(rows))
        agree += is_invertible(a) == is_permutation_matrix(a)
        total += 1
    dt = time.perf_counter() - t0
    criterion(1, agree == total == 84 and dt < 1.0,
              f"3x3 weight-3 matrices: invertible == permutation in {agree}/{total} in {dt:.3f}s (need 84/84, < 1 s)")


def test_c02_sum_of_two_permutations_is_singular(criterion):
    t0 = time.perf_counter()
    perms = list(all_perm_matrices(4))
    singular = sum(not is_invertible(mat_add(a, b)) for a, b in itertools.product(perms, perms))
    dt = time.perf_counter() - t0
    big = sum(rank(gen_noninvertible(128, seed)) < 128 for seed in range(1000))
    criterion(2, singular == 576 and dt < 1.0 and big == 1000,
              f"4x4 permutation-pair sums singular {singular}/576 in {dt:.3f}s; m=128 random {big}/1000 singular")


def test_c03_permutation_count(criterion):
    n3 = sum(
        is_permutation_matrix(BitMatrix(3, 3, (x >> 6, (x >> 3) & 7, x & 7))) for x in range(1 << 9)
    )
    n4 = sum(
        is_permutation_matrix(BitMatrix(4, 4, (x >> 12, (x >> 8) & 15, (x >> 4) & 15, x & 15)))
        for x in range(1 << 16)
    )
    criterion(3, (n3, n4) == (6, 24), f"permutation matrices: m=3 -> {n3} (6), m=4 -> {n4} (24)")


def test_c04_fisher_yates_uniformity(criterion):
    perms = list(itertools.permutations(range(1, 5)))
    stats = []
    for attempt in range(2):  # one rerun allowed
        seeds = random.Random(4000 + attempt)
        counts = dict.fromkeys(perms, 0)
        for _ in range(24_000):
            counts[tuple(fisher_yates(4, seeds.getrandbits(64)))] += 1
        stat = sum((c - 1000) ** 2 / 1000 for c in counts.values())
        stats.append(stat)
        if stat < CHI2_999_DF23:
            break
    criterion(4, stats[-1] < CHI2_999_DF23,
              f"chi-square {', '.join(f'{s:.2f}' for s in stats)} vs {CHI2_999_DF23} (23 d.o.f.)")


def test_c05_padding_guarantee(criterion):
    rng = random.Random(5)
    good = 0
    for _ in range(10_000):
        m = rng.choice([4, 8, 16, 128])
        k = rng.randint(0, 10 * m)
        out = pad(BitStream(k, rng.getrandbits(k) if k else 0), m)
        n, r = divmod(len(out), m)
        good += r == 0 and n % 2 == 0 and n >= 2
    criterion(5, good == 10_000, f"padded block count even and >= 2 in {good}/10000")


def test_c06_closed_form(criterion):
    rng = random.Random(6)
    good = 0
    for _ in range(500):
        m = rng.randint(2, 16)
        n = rng.randint(1, 6)
        p = gen_noninvertible(m, rng.getrandbits(64))
        blocks = [BitVector(m, rng.getrandbits(m)) for _ in range(n)]
        h = BitVector.zeros(m)
        for b in blocks:
            h = compress(p, h, b)
        closed = BitVector.zeros(m)
        for i, b in enumerate(reversed(blocks), start=1):
            closed = closed ^ mat_vec(mat_pow(p, i), b)
        ok = h == closed
        if n % 2 == 0:
            ok = ok and hash_blocks(HashParams(p, Model.CHAIN), blocks).value == closed
        good += ok
    criterion(6, good == 500, f"recurrence == closed form in {good}/500 (m <= 16, N <= 6)")


def test_c07_fixed_length(criterion):
    p = gen_noninvertible(128, 7)
    sizes = [0, 1, 1 << 10, 1 << 20, 8 << 20]
    lengths = []
    for model in (1, 2):
        params = HashParams(p, Model(model))
        for s in sizes:
            d = hash_message(params, random.Random(s).randbytes(s))
            lengths.append(d.value.length)
    good = sum(n == 128 for n in lengths)
    criterion(7, good == len(lengths), f"digest is 128 bits for {good}/{len(lengths)} inputs (0 B .. 8 MiB, both models)")


def test_c08_linearity(criterion):
    rng = random.Random(8)
    good = total = 0
    for m in (8, 128):
        p = gen_noninvertible(m, rng.getrandbits(64))
        for model in (1, 2):
            params = HashParams(p, Model(model))
            for _ in range(1000):
                n = rng.randint(0, 4 * m // 8 + 3)
                x, y = rng.randbytes(n), rng.randbytes(n)
                z = bytes(a ^ b for a, b in zip(x, y))
                good += hash_message(params, z) == hash_message(params, x) ^ hash_message(params, y)
                total += 1
    criterion(8, good == total == 4000, f"hash(x^y) == hash(x)^hash(y) in {good}/{total}")


def test_c09_constructive_collision(criterion, tmp_path, capsys):
    found = verified = 0
    for seed in range(100):
        mpath = tmp_path / f"p{seed}.gf2m"
        assert main(["genmat", "--size", "128", "--seed", str(seed), "--out", str(mpath)]) == 0
        model = 1 + seed % 2
        params = HashParams(gen_noninvertible(128, seed), Model(model))
        base = random.Random(seed).randbytes(16 * random.Random(seed + 1000).randint(1, 6))
        try:
            pair = construct_collision(params, base)
        except CollisionError:
            continue
        found += 1
        a, b = tmp_path / "a.bin", tmp_path / "b.bin"
        a.write_bytes(pair.msg_a)
        b.write_bytes(pair.msg_b)
        hex_digest = pair.digest.hex()
        ok_a = main(["check", "--matrix", str(mpath), "--model", str(model), "--expected", hex_digest, str(a)]) == 0
        ok_b = main(["check", "--matrix", str(mpath), "--model", str(model), "--expected", hex_digest, str(b)]) == 0
        verified += ok_a and ok_b and pair.msg_a != pair.msg_b
    capsys.readouterr()
    rate = found / 100
    criterion(9, rate >= 0.95 and verified == found,
              f"collisions found for {found}/100 seeds ({rate:.0%}, need >= 95%), {verified} re-verified by check")


def test_c10_naive_oracle(criterion):
    rng = random.Random(10)
    good = 0
    for _ in range(1000):
        m = rng.choice([4, 8, 12, 16, 20, 24, 28, 32])
        model = rng.choice([1, 2])
        params = HashParams(gen_noninvertible(m, rng.getrandbits(64)), Model(model))
        msg = rng.randbytes(rng.randint(0, 3 * m // 8 + 4))
        fast = hash_message(params, msg).value.bits()
        slow = reference_hash(params.matrix.to_lists(), message_bits(msg), model)
        good += fast == slow
    criterion(10, good == 1000, f"packed hash == nested-loop reference in {good}/1000 (m <= 32)")


def test_c11_benchmark_shape(criterion):
    params = HashParams(gen_noninvertible(128, 11), Model.MIXED)
    scaling = bench.run_bench(params, [64 << 10, 128 << 10, 256 << 10], reps=9, seed=11)
    ratios = bench.scaling_ratios(scaling)
    sweep = bench.run_bench(params, [b // 8 for b in bench.DEFAULT_SIZES_BITS], reps=5, seed=11)
    cx = bench.crossover(sweep + scaling)
    ok_a = all(1.6 <= r <= 2.4 for r in ratios)
    ok_b = cx is not None
    criterion(11, ok_a and ok_b,
              f"time ratios 64K->128K->256K {[round(r, 3) for r in ratios]} in [1.6, 2.4]; "
              f"crossover at {cx} B" + (" (SHA-256 faster at every size)" if cx == 32 else ""))


def test_c12_matrix_file_robustness(criterion):
    data = encode_matrix(gen_noninvertible(128, 12))
    assert decode_matrix(data) == gen_noninvertible(128, 12)
    rng = random.Random(12)
    rejected = 0
    for _ in range(1000):
        bad = bytearray(data)
        pos = rng.randrange(8 * len(bad))
        bad[pos // 8] ^= 1 << (pos % 8)
        try:
            decode_matrix(bytes(bad))
        except MatrixFileError:
            rejected += 1
    criterion(12, rejected == 1000, f"single-bit corruptions rejected {rejected}/1000")
