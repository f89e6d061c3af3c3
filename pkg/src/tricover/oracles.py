"""Brute-force reference solvers.  These never call into the fast solvers."""
from __future__ import annotations

import itertools
import math
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .geom_core import ExtRect, Point, check_dims, point_in_rect, rational
from .graphs import PartiteHypergraph3, WeightedGraph


class BudgetExceeded(RuntimeError):
    pass


def _default_time_ms() -> Optional[int]:
    v = os.environ.get("TRICOVER_BUDGET_MS")
    return int(v) if v else None


@dataclass
class OracleBudget:
    """Size caps are checked before any enumeration starts; the clock is checked while it runs."""
    max_subsets: int = 50_000_000
    max_points: int = 5_000
    time_ms: Optional[int] = field(default_factory=_default_time_ms)

    def start(self) -> "_Clock":
        return _Clock(self.time_ms)

    def check_subsets(self, count: int, what: str) -> None:
        if count > self.max_subsets:
            raise BudgetExceeded(f"{what}: {count} subsets exceed budget {self.max_subsets}")

    def check_points(self, count: int, what: str) -> None:
        if count > self.max_points:
            raise BudgetExceeded(f"{what}: {count} points exceed budget {self.max_points}")


class _Clock:
    def __init__(self, time_ms):
        self.deadline = None if time_ms is None else time.monotonic() + time_ms / 1000.0
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and (self.ticks & 1023) == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("oracle wall-clock budget exhausted")


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class CenterSolution:
    """radius is the L-infinity radius, or the squared radius for L2; centers index into the supply set."""
    radius: Fraction
    centers: tuple
    metric: str = "linf"


def _masks(points: Sequence[Point], rects: Sequence[ExtRect]) -> list:
    out = []
    for r in rects:
        m = 0
        for i, p in enumerate(points):
            if point_in_rect(p, r):
                m |= 1 << i
        out.append(m)
    return out


def _weight(r: ExtRect, weighted: bool) -> Fraction:
    if not weighted:
        return Fraction(1)
    return r.weight if r.weight is not None else Fraction(1)


def brute_cover_k(P: Sequence[Point], R: Sequence[ExtRect], k: int, weighted: bool = True,
                  budget: OracleBudget = DEFAULT_BUDGET) -> Optional[tuple]:
    """Minimum-weight k-subset of R covering P, as (sorted ids, weight).

    Subsets are visited in lexicographic id order and the first optimum is kept.
    Unweighted mode returns the first feasible subset.
    """
    if not 1 <= k <= 6:
        raise ValueError("k must lie in 1..6")
    check_dims(P, R)
    rects = sorted(R, key=lambda r: r.id)
    if len(rects) < k:
        return None
    budget.check_subsets(math.comb(len(rects), k), "brute_cover_k")
    clock = budget.start()
    full = (1 << len(P)) - 1
    masks = _masks(P, rects)
    ws = [_weight(r, weighted) for r in rects]
    m = len(rects)
    # suffix_min[i][j]: sum of the j smallest weights among rects[i:]
    suffix_sorted = [sorted(ws[i:]) for i in range(m + 1)]
    suffix_union = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | masks[i]

    best = [None, None]

    def lower(i, j):
        s = suffix_sorted[i]
        return sum(s[:j], Fraction(0)) if len(s) >= j else None

    def rec(start, chosen, cov, w):
        clock.tick()
        need = k - len(chosen)
        if need == 0:
            if cov == full and (best[0] is None or w < best[0]):
                best[0], best[1] = w, tuple(chosen)
            return
        if cov | suffix_union[start] != full:
            return
        lb = lower(start, need)
        if lb is None:
            return
        if best[0] is not None and (w + lb >= best[0] or not weighted):
            return
        for i in range(start, m - need + 1):
            chosen.append(i)
            rec(i + 1, chosen, cov | masks[i], w + ws[i])
            chosen.pop()
            if not weighted and best[0] is not None:
                return

    rec(0, [], 0, Fraction(0))
    if best[0] is None:
        return None
    ids = tuple(rects[i].id for i in best[1])
    total = sum((ws[i] for i in best[1]), Fraction(0))
    return ids, total


def branch_cover_k(P: Sequence[Point], R: Sequence[ExtRect], k: int,
                   budget: OracleBudget = DEFAULT_BUDGET) -> Optional[tuple]:
    """Minimum weight of an exactly-k subset of R covering P, as (sorted ids, weight).

    Exhaustive search that branches on the uncovered point lying in the fewest
    sets: every cover contains a set through that point.  A cover found with
    fewer than k sets is padded with the cheapest unused sets.  Branches are
    cut with a per-point price bound.  Meant for k = 6 where plain subset
    enumeration is too slow; the value agrees with brute_cover_k.
    """
    check_dims(P, R)
    rects = sorted(R, key=lambda r: r.id)
    if len(rects) < k:
        return None
    clock = budget.start()
    n = len(P)
    full = (1 << n) - 1
    masks = _masks(P, rects)
    ws = [_weight(r, True) for r in rects]
    by_point = [[c for c in range(len(rects)) if masks[c] >> i & 1] for i in range(n)]
    order = sorted(range(len(rects)), key=lambda c: (ws[c], c))
    scarce = sorted(range(n), key=lambda i: (len(by_point[i]), i))
    if any(not b for b in by_point):
        return None
    best = [None, None]

    def pad(chosen):
        extra = [c for c in order if c not in chosen][: k - len(chosen)]
        return tuple(sorted(chosen + extra))

    def rec(cov, chosen, w):
        clock.tick()
        if best[0] is not None and w >= best[0]:
            return
        if cov == full:
            full_set = pad(chosen)
            tot = sum((ws[c] for c in full_set), Fraction(0))
            if best[0] is None or tot < best[0] or (tot == best[0] and full_set < best[1]):
                best[0], best[1] = tot, full_set
            return
        if len(chosen) == k:
            return
        unc = ~cov & full
        if best[0] is not None:
            # each uncovered point pays at least its cheapest per-point share
            lb = w
            for j in scarce:
                if unc >> j & 1:
                    lb += min(ws[c] / bin(masks[c] & unc).count("1") for c in by_point[j])
            if lb >= best[0]:
                return
        i = next(j for j in scarce if unc >> j & 1)
        for c in by_point[i]:
            if c not in chosen:
                rec(cov | masks[c], chosen + [c], w + ws[c])

    rec(0, [], Fraction(0))
    if best[0] is None:
        return None
    return tuple(rects[c].id for c in best[1]), best[0]


def _dist(p: Point, q: Point, metric: str) -> Fraction:
    if len(p) != len(q):
        raise ValueError("dimension mismatch")
    if metric == "linf":
        return max(abs(a - b) for a, b in zip(p, q))
    if metric == "l2":
        return sum((a - b) * (a - b) for a, b in zip(p, q))
    raise ValueError(f"unknown metric {metric!r}")


def brute_kcenter_decide(P: Sequence[Point], k: int, radius: Fraction, metric: str = "linf",
                         Q: Optional[Sequence[Point]] = None, strict: bool = False) -> Optional[tuple]:
    """Centers from Q (default P) whose balls of the given radius cover P, or None.

    For L2 the radius is squared.  With strict=True distances must be < radius.
    Exhaustive branching on the first uncovered point.
    """
    Q = list(P) if Q is None else list(Q)
    n = len(P)
    full = (1 << n) - 1
    cover = []
    for q in Q:
        m = 0
        for i, p in enumerate(P):
            d = _dist(p, q, metric)
            if d < radius or (not strict and d == radius):
                m |= 1 << i
        cover.append(m)
    by_point = [[c for c in range(len(Q)) if cover[c] >> i & 1] for i in range(n)]

    def rec(cov, chosen):
        if cov == full:
            return chosen
        if len(chosen) == k:
            return None
        low = (~cov & full) & -(~cov & full)
        i = low.bit_length() - 1
        for c in by_point[i]:
            got = rec(cov | cover[c], chosen + (c,))
            if got is not None:
                return got
        return None

    if n == 0:
        return tuple(range(min(k, len(Q))))
    found = rec(0, ())
    if found is None:
        return None
    # pad with unused centers so exactly min(k, |Q|) ids come back
    extra = [c for c in range(len(Q)) if c not in found]
    return tuple(sorted(found + tuple(extra[: max(0, min(k, len(Q)) - len(found))])))


def brute_discrete_kcenter(P: Sequence[Point], k: int, metric: str = "linf",
                           Q: Optional[Sequence[Point]] = None,
                           budget: OracleBudget = DEFAULT_BUDGET) -> CenterSolution:
    """Exact optimal radius (squared for L2) with centers drawn from Q (default P)."""
    Q = list(P) if Q is None else list(Q)
    if k < 1:
        raise ValueError("k must be positive")
    if not P:
        return CenterSolution(Fraction(0), tuple(range(min(k, len(Q)))), metric)
    if not Q:
        raise ValueError("empty supply set")
    budget.check_points(len(P) + len(Q), "brute_discrete_kcenter")
    clock = budget.start()
    if k >= len(Q):
        cands = [max(min(_dist(p, q, metric) for q in Q) for p in P)]
    else:
        cands = sorted({_dist(p, q, metric) for p in P for q in Q})
    lo, hi = 0, len(cands) - 1
    best = None
    while lo <= hi:
        clock.tick()
        mid = (lo + hi) // 2
        got = brute_kcenter_decide(P, k, cands[mid], metric, Q)
        if got is not None:
            best = (cands[mid], got)
            hi = mid - 1
        else:
            lo = mid + 1
    assert best is not None
    return CenterSolution(best[0], best[1], metric)


def brute_maxcov(P: Sequence[Point], R: Sequence[ExtRect], k: int = 2,
                 budget: OracleBudget = DEFAULT_BUDGET) -> tuple:
    """Pair of ranges covering the most points of the multiset P: ((id_a, id_b), count).

    Pair counts use inclusion-exclusion |A| + |B| - |A and B|.
    """
    if k != 2:
        raise ValueError("only k = 2 is supported")
    rects = sorted(R, key=lambda r: r.id)
    if len(rects) < 2:
        raise ValueError("need at least two ranges")
    budget.check_subsets(math.comb(len(rects), 2), "brute_maxcov")
    clock = budget.start()
    masks = _masks(P, rects)
    single = [bin(m).count("1") for m in masks]
    best = None
    for a, b in itertools.combinations(range(len(rects)), 2):
        clock.tick()
        c = single[a] + single[b] - bin(masks[a] & masks[b]).count("1")
        if best is None or c > best[1]:
            best = ((rects[a].id, rects[b].id), c)
    return best


def graph_min_triangle(G: WeightedGraph) -> Optional[tuple]:
    """Lexicographically first minimum-weight triangle as ((u, v, w), weight)."""
    adj = G.adjacency()
    best = None
    for u in range(G.n):
        for v in sorted(x for x in adj[u] if x > u):
            for w in sorted(x for x in adj[v] if x > v):
                if w in adj[u]:
                    wt = sum((x or 0 for x in (adj[u][v], adj[v][w], adj[u][w])), Fraction(0))
                    if best is None or wt < best[1]:
                        best = ((u, v, w), wt)
    return best


def graph_has_triangle(G: WeightedGraph) -> bool:
    return graph_min_triangle(G) is not None


def graph_min_4clique(G: WeightedGraph) -> Optional[tuple]:
    adj = G.adjacency()
    best = None
    for quad in itertools.combinations(range(G.n), 4):
        if all(b in adj[a] for a, b in itertools.combinations(quad, 2)):
            wt = sum((adj[a][b] or 0 for a, b in itertools.combinations(quad, 2)), Fraction(0))
            if best is None or wt < best[1]:
                best = (quad, wt)
    return best


def hyperclique(H: PartiteHypergraph3, size: Optional[int] = None) -> bool:
    """True iff one vertex per part can be chosen with every triple an edge.

    size defaults to the number of parts; a smaller size asks for a clique on
    any `size` distinct parts.
    """
    m = H.num_parts
    size = m if size is None else size
    E = H.edge_set()
    for partset in itertools.combinations(range(m), size):
        choice = []

        def rec(i):
            if i == len(partset):
                return True
            a = partset[i]
            for b in range(len(H.parts[a])):
                v = (a, b)
                if all(tuple(sorted((u, w, v))) in E for u, w in itertools.combinations(choice, 2)):
                    choice.append(v)
                    if rec(i + 1):
                        return True
                    choice.pop()
            return False

        if rec(0):
            return True
    return False


__all__ = [
    "BudgetExceeded", "OracleBudget", "DEFAULT_BUDGET", "CenterSolution", "brute_cover_k",
    "branch_cover_k",
    "brute_kcenter_decide", "brute_discrete_kcenter", "brute_maxcov", "graph_min_triangle",
    "graph_has_triangle", "graph_min_4clique", "hyperclique",
]
