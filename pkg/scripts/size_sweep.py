"""Time the matrix hash against SHA-256 from 256 bit up to 512 Kibit inputs.

    python scripts/size_sweep.py [--model 2] [--extended] [--json out.json]

``--extended`` adds 1 MiB .. 8 MiB inputs. Absolute numbers depend on the
machine; the shape (model time linear in size, SHA-256 ahead for large
inputs) is what to look at.
"""
import argparse
import dataclasses
import sys
from dataclasses import dataclass

from gf2hash import bench
from gf2hash.digest import HashParams, Model
from gf2hash.matgen import gen_noninvertible


@dataclass
class Config:
    m: int = 128
    matrix_seed: int = 1
    model: int = 2
    timing: bench.BenchConfig = dataclasses.field(default_factory=bench.BenchConfig)
    extended_sizes: tuple[int, ...] = (1 << 20, 2 << 20, 4 << 20, 8 << 20)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--model", type=int, choices=(1, 2), default=2)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--json")
    args = ap.parse_args(argv)

    cfg = Config(model=args.model, timing=bench.BenchConfig(reps=args.reps))
    params = HashParams(gen_noninvertible(cfg.m, cfg.matrix_seed), Model(cfg.model))
    sizes = list(cfg.timing.sizes) + (list(cfg.extended_sizes) if args.extended else [])
    rows = bench.run_bench(params, sizes, cfg.timing.reps, cfg.timing.seed)
    print(f"m={cfg.m} model={cfg.model} matrix_seed={cfg.matrix_seed}")
    print(bench.format_table(rows))
    ratios = bench.scaling_ratios(rows)
    print("successive model time ratios:", " ".join(f"{r:.2f}" for r in ratios))
    if args.json:
        with open(args.json, "w") as f:
            f.write(bench.rows_to_json(rows, m=cfg.m, model=cfg.model) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
