"""Run every reduction generator against both brute-force oracles on seeded sources
and print one summary row per kind.

    python scripts/reduction_sweep.py --graphs 30 --hypergraphs 10
"""
import argparse
import time
from dataclasses import dataclass

from tricover.instances import make_rng, random_graph, random_hypergraph
from tricover.reductions import KINDS, DegenerateSourceError, generate, verify_reduction


@dataclass
class SweepConfig:
    graphs: int = 30
    hypergraphs: int = 10
    seed: int = 7
    max_vertices: int = 6


def sources(kind: str, cfg: SweepConfig, rng):
    if kind in ("d2c_r13", "dkc", "maxcov2_r12"):
        return [random_hypergraph(rng, per_part=2) for _ in range(cfg.hypergraphs)]
    weighted = kind in ("weighted_triangle_r2", "cover6_r2")
    top = 5 if kind == "cover6_r2" else cfg.max_vertices
    return [random_graph(rng, int(rng.integers(3, top + 1)), 0.7, weighted=weighted,
                         zero_label=kind != "cover6_r2") for _ in range(cfg.graphs)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=SweepConfig.graphs)
    ap.add_argument("--hypergraphs", type=int, default=SweepConfig.hypergraphs)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = ap.parse_args()
    cfg = SweepConfig(a.graphs, a.hypergraphs, a.seed)
    rng = make_rng(cfg.seed)
    print(f"{'kind':24s} {'runs':>5s} {'yes':>4s} {'skip':>5s} {'bad':>4s} {'secs':>7s}")
    for kind in KINDS:
        t0 = time.perf_counter()
        runs = yes = skip = bad = 0
        for src in sources(kind, cfg, rng):
            try:
                inst = generate(kind, src)
            except DegenerateSourceError:
                skip += 1
                continue
            rep = verify_reduction(kind, src, inst)
            runs += 1
            yes += rep.source_answer
            bad += not rep.agree
        print(f"{kind:24s} {runs:5d} {yes:4d} {skip:5d} {bad:4d} {time.perf_counter() - t0:7.1f}")


if __name__ == "__main__":
    main()
