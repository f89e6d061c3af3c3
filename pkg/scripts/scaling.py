"""Scaling run for the unweighted unit-square solver: median wall time per size,
doubling ratios and a fitted log-log exponent.

    python scripts/scaling.py --exponents 12,13,14,15 --runs 5
"""
import argparse
import math
import statistics
import time
from dataclasses import dataclass

import numpy as np

from tricover.cover3 import solve
from tricover.instances import bench_unit_instance
from tricover.oracles import brute_cover_k


@dataclass
class ScalingConfig:
    exponents: tuple = (12, 13, 14, 15)
    runs: int = 5
    seed: int = 0
    variant: str = "unit_unw"
    brute_size: int = 48
    ratio_limit: float = 2 ** 1.9


def run(cfg: ScalingConfig) -> dict:
    P, R = bench_unit_instance(256, cfg.seed + 1)
    solve(P, R, cfg.variant)
    times = {}
    for e in cfg.exponents:
        P, R = bench_unit_instance(2 ** e, cfg.seed)
        ts = []
        for _ in range(cfg.runs):
            t = time.perf_counter()
            solve(P, R, cfg.variant)
            ts.append(time.perf_counter() - t)
        times[2 ** e] = statistics.median(ts)
        print(f"n={2 ** e:6d}  median {times[2 ** e]:.3f}s  runs {[round(x, 3) for x in ts]}", flush=True)
    ns = sorted(times)
    slope = float(np.polyfit(np.log2(ns), np.log2([times[n] for n in ns]), 1)[0])
    m = cfg.brute_size
    P, R = bench_unit_instance(m, cfg.seed)
    t = time.perf_counter()
    brute_cover_k(P, R, 3, weighted=False)
    brute = (time.perf_counter() - t) / math.comb(m, 3) * math.comb(ns[-1], 3)
    return {"times": times, "ratios": [times[b] / times[a] for a, b in zip(ns, ns[1:])],
            "exponent": slope, "brute_extrapolated": brute, "speedup": brute / times[ns[-1]]}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exponents", default="12,13,14,15")
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = ScalingConfig(tuple(int(x) for x in a.exponents.split(",")), a.runs, a.seed)
    res = run(cfg)
    print("ratios", [round(r, 3) for r in res["ratios"]], "limit", round(cfg.ratio_limit, 3))
    print(f"fitted exponent {res['exponent']:.3f}")
    print(f"brute extrapolated {res['brute_extrapolated']:.3g}s, speedup {res['speedup']:.3g}x")


if __name__ == "__main__":
    main()
