"""Benchmark sweep over sizes for one variant; writes a gnuplot-ready CSV.

    python scripts/bench.py --variant basic --sizes 128,256,512 --out bench_out/basic.csv
"""
import argparse
import csv
import os
import sys
from dataclasses import asdict

from tricover.cli import BENCH_FIELDS, BenchConfig, bench_rows, step3_within_bound


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--variant", default=BenchConfig.variant)
    ap.add_argument("--sizes", default=",".join(map(str, BenchConfig.sizes)))
    ap.add_argument("--repeats", type=int, default=BenchConfig.repeats)
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    ap.add_argument("--grid", type=int, default=None)
    ap.add_argument("--oracle-check", action="store_true")
    ap.add_argument("--out", default=None)
    a = ap.parse_args(argv)
    cfg = BenchConfig(a.variant, tuple(int(s) for s in a.sizes.split(",")), a.repeats, a.seed, a.grid)
    print("# config", asdict(cfg), file=sys.stderr)
    if a.out:
        os.makedirs(os.path.dirname(a.out) or ".", exist_ok=True)
    out = open(a.out, "w", newline="") if a.out else sys.stdout
    w = csv.DictWriter(out, fieldnames=BENCH_FIELDS + ("step3_ok",), lineterminator="\n")
    w.writeheader()
    for row in bench_rows(cfg.variant, cfg.sizes, cfg.repeats, cfg.seed, cfg.g, a.oracle_check):
        row["step3_ok"] = step3_within_bound(row, cfg.step3_const)
        w.writerow(row)
        out.flush()
    if a.out:
        out.close()


if __name__ == "__main__":
    main()
