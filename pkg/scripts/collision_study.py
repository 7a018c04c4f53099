"""Success rate of kernel-vector collisions over many generated matrices.

    python scripts/collision_study.py [--seeds 100] [--m 128]
"""
import argparse
import random
import sys
from dataclasses import dataclass

from gf2hash.analysis import CollisionError, construct_collision
from gf2hash.digest import HashParams, Model, hash_message
from gf2hash.gf2 import rank
from gf2hash.matgen import gen_noninvertible


@dataclass
class Config:
    m: int = 128
    seeds: int = 100
    blocks: int = 4


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=Config.m)
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    args = ap.parse_args(argv)
    cfg = Config(m=args.m, seeds=args.seeds)

    ok = 0
    nullities = []
    for seed in range(cfg.seeds):
        p = gen_noninvertible(cfg.m, seed)
        nullities.append(cfg.m - rank(p))
        params = HashParams(p, Model.MIXED if cfg.m % 4 == 0 else Model.CHAIN)
        base = random.Random(seed).randbytes(cfg.blocks * cfg.m // 8)
        try:
            pair = construct_collision(params, base)
        except CollisionError:
            continue
        assert hash_message(params, pair.msg_b) == hash_message(params, pair.msg_a)
        ok += 1
    print(f"collisions: {ok}/{cfg.seeds} ({ok / cfg.seeds:.1%})")
    print(f"nullity of P: min {min(nullities)}, mean {sum(nullities) / len(nullities):.2f}, max {max(nullities)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
