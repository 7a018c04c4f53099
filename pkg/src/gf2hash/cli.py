"""gf2hash command line.

Exit codes: 0 success or match, 1 mismatch or failed verification,
2 usage error, 3 I/O or file-format error.
"""
from __future__ import annotations

import argparse
import logging
import math
import os
import random
import sys
from typing import BinaryIO, Sequence

from . import analysis, bench
from .digest import Hasher, HashParams, Model
from .gf2 import rank
from .matfile import MatrixFileError, file_size, inspect_bytes, read_matrix, write_matrix
from .matgen import MASK64, gen_noninvertible

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

SEED_ENV = "GF2HASH_SEED"
CHUNK = 1 << 20


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value <= MASK64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _size(text: str) -> int:
    units = {"K": 1 << 10, "M": 1 << 20}
    text = text.strip()
    mult = units.get(text[-1:].upper(), 1)
    if mult > 1:
        text = text[:-1]
    try:
        value = int(text) * mult
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("sizes must be positive")
    return value


def _size_list(text: str) -> list[int]:
    return [_size(t) for t in text.split(",") if t.strip()]


def _load_params(path: str, model: int) -> HashParams:
    try:
        p = read_matrix(path)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror or e}", EXIT_IO) from e
    except MatrixFileError as e:
        raise CliError(f"{path}: {e}", EXIT_IO) from e
    try:
        return HashParams(p, Model(model))
    except ValueError as e:
        raise CliError(str(e), EXIT_USAGE) from e


def _hash_stream(params: HashParams, f: BinaryIO):
    h = Hasher(params)
    while chunk := f.read(CHUNK):
        h.update(chunk)
    return h.digest()


def _hash_path(params: HashParams, path: str | None):
    if path is None or path == "-":
        return _hash_stream(params, sys.stdin.buffer)
    try:
        with open(path, "rb") as f:
            return _hash_stream(params, f)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror or e}", EXIT_IO) from e


def cmd_genmat(args: argparse.Namespace) -> int:
    m = args.size
    if m < 2:
        raise CliError(f"--size must be at least 2, got {m}", EXIT_USAGE)
    p = gen_noninvertible(m, args.seed)
    try:
        write_matrix(args.out, p)
    except OSError as e:
        raise CliError(f"cannot write {args.out}: {e.strerror or e}", EXIT_IO) from e
    print(f"m: {m}")
    print(f"rank: {rank(p)}")
    print(f"wrote {file_size(m)} bytes to {args.out}")
    return EXIT_OK


def cmd_hash(args: argparse.Namespace) -> int:
    params = _load_params(args.matrix, args.model)
    d = _hash_path(params, args.file)
    print(d.bits() if args.bits else d.hex())
    return EXIT_OK


def cmd_verify_matrix(args: argparse.Namespace) -> int:
    try:
        with open(args.path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise CliError(f"cannot read {args.path}: {e.strerror or e}", EXIT_IO) from e
    result = inspect_bytes(data)
    if result.matrix is not None:
        print(f"m: {result.matrix.nrows}")
        print(f"rank: {result.rank}")
        print(f"nullity: {result.nullity}")
    for problem in result.problems:
        print(f"FAIL: {problem}")
    if result.ok:
        print("OK")
        return EXIT_OK
    return EXIT_MISMATCH


def cmd_check(args: argparse.Namespace) -> int:
    params = _load_params(args.matrix, args.model)
    d = _hash_path(params, args.file)
    expected = args.expected.strip().lower()
    actual = d.bits() if len(expected) == params.m and set(expected) <= {"0", "1"} else d.hex()
    if expected == actual:
        print("OK")
        return EXIT_OK
    print("MISMATCH")
    print(f"expected: {expected}")
    print(f"actual:   {actual}")
    return EXIT_MISMATCH


def cmd_bench(args: argparse.Namespace) -> int:
    params = _load_params(args.matrix, args.model)
    seed = args.seed
    if seed is None:
        env = os.environ.get(SEED_ENV)
        try:
            seed = _seed(env) if env else 0
        except argparse.ArgumentTypeError as e:
            raise CliError(f"{SEED_ENV}: {e}", EXIT_USAGE) from e
    rows = bench.run_bench(params, args.sizes, args.reps, seed)
    print(f"m={params.m} model={int(params.model)} reps={args.reps} seed={seed}")
    print(bench.format_table(rows))
    if args.json:
        text = bench.rows_to_json(rows, m=params.m, model=int(params.model), seed=seed)
        try:
            with open(args.json, "w") as f:
                f.write(text + "\n")
        except OSError as e:
            raise CliError(f"cannot write {args.json}: {e.strerror or e}", EXIT_IO) from e
    return EXIT_OK


def _collision_base(params: HashParams, args: argparse.Namespace) -> bytes:
    if args.input:
        try:
            with open(args.input, "rb") as f:
                return f.read()
        except OSError as e:
            raise CliError(f"cannot read {args.input}: {e.strerror or e}", EXIT_IO) from e
    # two whole blocks, byte aligned
    unit = math.lcm(params.m, 8) // 8
    length = args.length or 2 * unit
    return random.Random(args.seed).randbytes(length)


def cmd_analyze(args: argparse.Namespace) -> int:
    params = _load_params(args.matrix, args.model)
    if args.mode == "collision":
        base = _collision_base(params, args)
        try:
            pair = analysis.construct_collision(params, base)
        except ValueError as e:
            raise CliError(str(e), EXIT_USAGE) from e
        except analysis.CollisionError as e:
            print(f"FAIL: {e}")
            return EXIT_MISMATCH
        print(f"msg_a:  {pair.msg_a.hex()}")
        print(f"msg_b:  {pair.msg_b.hex()}")
        print(f"digest: {pair.digest.hex()}")
        print("verified: yes")
        return EXIT_OK
    length = args.length or 2 * math.lcm(params.m, 8) // 8
    if args.mode == "linearity":
        ok = analysis.linear_agreements(params, args.trials, length, args.seed)
        print(f"{'PASS' if ok == args.trials else 'FAIL'} ({ok}/{args.trials})")
        return EXIT_OK if ok == args.trials else EXIT_MISMATCH
    report = analysis.avalanche(params, args.trials, length, args.seed)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gf2hash", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--matrix", required=True, help="matrix file from genmat")
        p.add_argument("--model", type=int, choices=(1, 2), default=2)

    p = sub.add_parser("genmat", help="generate a singular sum-of-two-permutations matrix")
    p.add_argument("--size", type=int, default=128)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_genmat)

    p = sub.add_parser("hash", help="hash a file or standard input")
    matrix_opts(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--hex", action="store_true", help="hex output (default)")
    fmt.add_argument("--bits", action="store_true", help="print the digest as a bit string")
    p.add_argument("file", nargs="?")
    p.set_defaults(func=cmd_hash)

    p = sub.add_parser("verify-matrix", help="check a matrix file")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify_matrix)

    p = sub.add_parser("check", help="recompute a digest and compare")
    matrix_opts(p)
    p.add_argument("--expected", required=True)
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="time the model against SHA-256")
    matrix_opts(p)
    p.add_argument("--sizes", type=_size_list, required=True,
                   help="comma separated byte counts, K/M suffixes allowed")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=_seed, default=None,
                   help=f"buffer seed (falls back to ${SEED_ENV}, then 0)")
    p.add_argument("--json", help="also write the rows as JSON to this path")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("analyze", help="collision, linearity or avalanche analysis")
    matrix_opts(p)
    p.add_argument("--mode", choices=("collision", "avalanche", "linearity"), required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--length", type=int, default=None, help="message length in bytes")
    p.add_argument("--input", help="base message file for collision mode")
    p.add_argument("--json", action="store_true", help="machine-readable avalanche report")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be >= 1")
    if getattr(args, "reps", 1) < 1:
        parser.error("--reps must be >= 1")
    try:
        return args.func(args)
    except CliError as e:
        print(f"gf2hash: error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
