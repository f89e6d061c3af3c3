"""Seeded instance generators shared by the CLI, the scripts and the tests.

All randomness comes from ``numpy.random.Generator(PCG64(seed))``; equal seeds
give bit-identical instances.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional

import numpy as np

from .geom_core import ExtRect
from .graphs import PartiteHypergraph3, WeightedGraph

F = Fraction


def make_rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.Generator(np.random.PCG64(seed))


def _int(rng, lo, hi) -> int:
    """Uniform integer in [lo, hi]."""
    return int(rng.integers(lo, hi + 1))


def random_rects(seed, n: int, weighted: bool = True, C: Optional[int] = None) -> tuple:
    """n integer points on a C x C grid and between 3 and n rectangles with corners in [-1, C+1]."""
    rng = make_rng(seed)
    C = C if C is not None else int(rng.choice([3, 6, 12]))
    P = [(F(_int(rng, 0, C)), F(_int(rng, 0, C))) for _ in range(n)]
    R = []
    for k in range(_int(rng, 3, max(3, n))):
        a, b = sorted(_int(rng, -1, C + 1) for _ in range(2))
        c, d = sorted(_int(rng, -1, C + 1) for _ in range(2))
        w = _int(rng, 1, 100) if weighted else None
        R.append(ExtRect.closed((a, c), (b, d), weight=w, id=k))
    return P, R


def _rnd_rect(rng, C: int, unit: bool):
    if unit:
        x, y = F(_int(rng, 0, 4 * C), 4), F(_int(rng, 0, 4 * C), 4)
        return (x, y), (x + 1, y + 1)
    a, b = sorted(_int(rng, 0, C) for _ in range(2))
    c, d = sorted(_int(rng, 0, C) for _ in range(2))
    return (F(a), F(c)), (F(b), F(d))


def planted_instance(seed, unit: bool, weighted: bool, n: Optional[int] = None,
                     stray: int = 0) -> tuple:
    """Points drawn inside three planted ranges, plus random and jittered distractor ranges.

    Plain random unit-square instances are almost never coverable, so the
    points come from the planted ranges and every instance is feasible.
    ``stray`` extra points drawn anywhere in the box make infeasible inputs
    likely.
    """
    rng = make_rng(seed)
    C = int(rng.choice([3, 4, 6])) if unit else int(rng.choice([8, 12, 20]))
    plant = [_rnd_rect(rng, C, unit) for _ in range(3)]
    n = n if n is not None else _int(rng, 5, 40)
    q = 4 if unit else 1
    P = []
    for _ in range(n):
        lo, hi = plant[_int(rng, 0, 2)]
        P.append((F(_int(rng, int(lo[0] * q), int(hi[0] * q)), q),
                  F(_int(rng, int(lo[1] * q), int(hi[1] * q)), q)))
    for _ in range(stray):
        P.append((F(_int(rng, 0, (C + 1) * q), q), F(_int(rng, 0, (C + 1) * q), q)))
    shapes = plant + [_rnd_rect(rng, C, unit) for _ in range(_int(rng, 3, 25))]
    for lo, hi in plant:
        for _ in range(_int(rng, 0, 3)):
            if unit:
                dx, dy = F(_int(rng, -2, 2), 4), F(_int(rng, -2, 2), 4)
                shapes.append(((lo[0] + dx, lo[1] + dy), (hi[0] + dx, hi[1] + dy)))
            else:
                lo2 = (lo[0] + _int(rng, -1, 1), lo[1] + _int(rng, -1, 1))
                hi2 = (hi[0] + _int(rng, -1, 1), hi[1] + _int(rng, -1, 1))
                if lo2[0] <= hi2[0] and lo2[1] <= hi2[1]:
                    shapes.append((lo2, hi2))
    order = rng.permutation(len(shapes))
    R = [ExtRect.closed(*shapes[int(j)], weight=_int(rng, 1, 100) if weighted else None, id=k)
         for k, j in enumerate(order)]
    return P, R


def bench_unit_instance(n: int, seed: int = 0, side=F(11, 5)) -> tuple:
    """n points uniform in [0, side]^2 with six-decimal coordinates and the unit squares centred on them."""
    rng = make_rng(seed)
    scale = 10 ** 6
    top = int(side * scale)
    xs = rng.integers(0, top, size=n)
    ys = rng.integers(0, top, size=n)
    half = F(1, 2)
    P = [(F(int(x), scale), F(int(y), scale)) for x, y in zip(xs, ys)]
    R = [ExtRect.closed((p[0] - half, p[1] - half), (p[0] + half, p[1] + half), id=k)
         for k, p in enumerate(P)]
    return P, R


def random_planar_points(seed, n: int, C: int = 20) -> list:
    rng = make_rng(seed)
    return [(F(_int(rng, 0, C)), F(_int(rng, 0, C))) for _ in range(n)]


def random_graph(seed, n: int, p: float = 0.5, weighted: bool = False,
                 zero_label: bool = True) -> WeightedGraph:
    """Random graph with evenly spaced labels in [0, 1/10] (or in (0, 1/10] without the zero label)."""
    rng = make_rng(seed)
    if zero_label:
        labels = [F(i, 10 * (n - 1)) for i in range(n)] if n > 1 else [F(1, 10)]
    else:
        labels = [F(i + 1, 10 * n) for i in range(n)]
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.append((u, v, F(_int(rng, 0, 10), 100)) if weighted else (u, v))
    return WeightedGraph(tuple(labels), tuple(edges))


_LABEL_POOL = (F(0), F(1, 4), F(1, 3), F(1, 2), F(3, 4), F(1))


def all_triples(sizes) -> list:
    out = []
    for parts in itertools.combinations(range(len(sizes)), 3):
        for idx in itertools.product(*(range(sizes[p]) for p in parts)):
            out.append(tuple(zip(parts, idx)))
    return out


def random_hypergraph(seed, parts: int = 6, per_part: int = 2, density: float = 0.6,
                      break_prob: float = 0.5) -> PartiteHypergraph3:
    """Random partite hypergraph with a planted clique that loses one triple with probability break_prob."""
    rng = make_rng(seed)
    labels = []
    for _ in range(parts):
        pick = sorted(int(i) for i in rng.choice(len(_LABEL_POOL), size=per_part, replace=False))
        labels.append(tuple(_LABEL_POOL[i] for i in pick))
    choice = [_int(rng, 0, per_part - 1) for _ in range(parts)]
    clique = sorted(tuple((p, choice[p]) for p in tri) for tri in itertools.combinations(range(parts), 3))
    dropped = clique[_int(rng, 0, len(clique) - 1)] if rng.random() < break_prob else None
    cl = set(clique)
    edges = [t for t in all_triples([per_part] * parts)
             if (t in cl and t != dropped) or (t not in cl and rng.random() < density)]
    return PartiteHypergraph3(tuple(labels), tuple(edges))


def near_complete_hypergraphs(parts: int = 6, max_missing: int = 2):
    """All one-vertex-per-part hypergraphs whose edge set is complete minus at most max_missing triples."""
    T = all_triples([1] * parts)
    labels = tuple((F(1, 2),) for _ in range(parts))
    for r in range(max_missing + 1):
        for gone in itertools.combinations(range(len(T)), r):
            drop = set(gone)
            yield PartiteHypergraph3(labels, tuple(t for x, t in enumerate(T) if x not in drop))


__all__ = ["make_rng", "random_rects", "planted_instance", "bench_unit_instance",
           "random_planar_points", "random_graph", "random_hypergraph", "all_triples",
           "near_complete_hypergraphs"]
