"""Discrete k-center: rectilinear 3-center via unit-square covers, plus exact small-scale tools.

Centers are always drawn from a supply set Q (default: the demand set P) and
reported as indices into Q.  L-infinity radii are plain; L2 radii are squared.
"""
from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .cover3 import solve_unit_squares_unweighted
from .geom_core import ExtRect, Point, rational
from .oracles import CenterSolution

HALF = Fraction(1, 2)


def _linf(p: Point, q: Point) -> Fraction:
    return max(abs(a - b) for a, b in zip(p, q))


def _sq(p: Point, q: Point) -> Fraction:
    return sum(((a - b) * (a - b) for a, b in zip(p, q)), Fraction(0))


def _pad(found, nq: int, k: int = 3) -> tuple:
    found = list(dict.fromkeys(found))
    for c in range(nq):
        if len(found) >= min(k, nq):
            break
        if c not in found:
            found.append(c)
    return tuple(sorted(found))


def rect_d3c_decide(P: Sequence[Point], r, Q: Optional[Sequence[Point]] = None) -> Optional[tuple]:
    """Three centers from Q whose L-infinity balls of radius r cover P, or None."""
    r = rational(r)
    if r < 0:
        raise ValueError("radius must be non-negative")
    P = list(P)
    Q = list(P) if Q is None else list(Q)
    if not P:
        return _pad([], len(Q))
    if not Q:
        return None
    if r == 0:
        # balls degenerate to their centers
        where = {}
        for c, q in enumerate(Q):
            where.setdefault(tuple(q), c)
        need = {tuple(p) for p in P}
        if len(need) > 3 or any(p not in where for p in need):
            return None
        return _pad([where[p] for p in need], len(Q))
    if len(Q) <= 3:
        ok = all(any(_linf(p, q) <= r for q in Q) for p in P)
        return _pad([], len(Q)) if ok else None
    s = 2 * r
    # rescale so every ball becomes a unit square
    Ps = [(p[0] / s, p[1] / s) for p in P]
    R = [ExtRect.closed((q[0] / s - HALF, q[1] / s - HALF), (q[0] / s + HALF, q[1] / s + HALF), id=c)
         for c, q in enumerate(Q)]
    sol = solve_unit_squares_unweighted(Ps, R)
    return None if sol is None else tuple(sol.ids)


# --------------------------------------------------------------------------
# selection in unions of implicit sorted matrices

class SortedMatrixUnion:
    """Union of implicit matrices M[i][j] = a[i] + c[j] with a and c ascending.

    select(k) returns the k-th smallest entry (0-based, with multiplicity)
    without materializing the matrices: rows keep active column windows that
    shrink around a weighted median of row medians until few entries remain.
    """

    def __init__(self, mats: Sequence[tuple]):
        self.mats = [(list(a), list(c)) for a, c in mats if len(a) and len(c)]

    def __len__(self) -> int:
        return sum(len(a) * len(c) for a, c in self.mats)

    def count_lt(self, v) -> int:
        return sum(bisect_left(c, v - x) for a, c in self.mats for x in a)

    def select(self, k: int):
        if not 0 <= k < len(self):
            raise IndexError("rank out of range")
        rows = [(x, c, 0, len(c)) for a, c in self.mats for x in a]
        while True:
            total = sum(hi - lo for _, _, lo, hi in rows)
            if total <= max(64, 4 * len(rows)):
                vals = sorted(x + c[j] for x, c, lo, hi in rows for j in range(lo, hi))
                return vals[k]
            meds = sorted((x + c[(lo + hi) // 2], hi - lo) for x, c, lo, hi in rows if hi > lo)
            half, acc, pivot = total / 2, 0, meds[-1][0]
            for v, wgt in meds:
                acc += wgt
                if acc >= half:
                    pivot = v
                    break
            lt = [bisect_left(c, pivot - x, lo, hi) for x, c, lo, hi in rows]
            le = [bisect_right(c, pivot - x, lo, hi) for x, c, lo, hi in rows]
            n_lt = sum(p - row[2] for p, row in zip(lt, rows))
            n_le = sum(p - row[2] for p, row in zip(le, rows))
            if k < n_lt:
                rows = [(x, c, lo, p) for (x, c, lo, hi), p in zip(rows, lt)]
            elif k < n_le:
                return pivot
            else:
                k -= n_le
                rows = [(x, c, p, hi) for (x, c, lo, hi), p in zip(rows, le)]


def _difference_union(P, Q) -> SortedMatrixUnion:
    # r ranges over |p - q| per axis: entries a_i - b_j and b_j - a_i for both axes
    mats = []
    for axis in (0, 1):
        a = sorted(p[axis] for p in P)
        b = sorted(q[axis] for q in Q)
        mats.append((a, [-v for v in reversed(b)]))
        mats.append((b, [-v for v in reversed(a)]))
    return SortedMatrixUnion(mats)


def candidate_diameters(P, Q=None) -> list:
    """All distinct non-negative axis differences between P and Q, sorted (materialized)."""
    Q = list(P) if Q is None else list(Q)
    return sorted({abs(p[d] - q[d]) for p in P for q in Q for d in (0, 1)})


def rect_d3c_optimize(P: Sequence[Point], Q: Optional[Sequence[Point]] = None,
                      materialize: bool = False) -> CenterSolution:
    """Smallest L-infinity radius for three centers from Q covering P, with witness centers.

    The optimum is the L-infinity distance from some point to its center, so it
    is an axis difference |p - q| itself; the search runs over ranks of the
    implicit difference matrices (or over a sorted materialized list when
    ``materialize`` is set) and calls the decider O(log n) times.
    """
    P = list(P)
    Q = list(P) if Q is None else list(Q)
    if not P:
        return CenterSolution(Fraction(0), _pad([], len(Q)), "linf")
    if not Q:
        raise ValueError("empty supply set")
    got = rect_d3c_decide(P, 0, Q)
    if got is not None:
        return CenterSolution(Fraction(0), got, "linf")
    if materialize:
        vals = candidate_diameters(P, Q)
        value = vals.__getitem__
        lo, hi = 0, len(vals) - 1
    else:
        U = _difference_union(P, Q)
        value = U.select
        lo, hi = U.count_lt(Fraction(0)), len(U) - 1
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        d = value(mid)
        got = rect_d3c_decide(P, d, Q)
        if got is not None:
            best = (d, got)
            hi = mid - 1
        else:
            lo = mid + 1
    if best is None:
        raise AssertionError("largest candidate radius must be feasible")
    return CenterSolution(best[0], best[1], "linf")


# --------------------------------------------------------------------------
# exact small-scale tools

def euclid_dkc_brute(P: Sequence[Point], k: int) -> CenterSolution:
    """Minimum squared L2 radius over all k-subsets of P as centers (any dimension)."""
    P = list(P)
    n = len(P)
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    D = [[_sq(p, q) for q in P] for p in P]
    best = None
    for C in itertools.combinations(range(n), k):
        rad = max(min(D[c][i] for c in C) for i in range(n))
        if best is None or rad < best[0]:
            best = (rad, C)
    return CenterSolution(best[0], tuple(best[1]), "l2")


def _far_bits(P, r, metric: str) -> np.ndarray:
    n = len(P)
    words = (n + 63) // 64
    bits = np.zeros((n, words), dtype=np.uint64)
    dist = _sq if metric == "l2" else _linf
    for i in range(n):
        for j in range(n):
            if dist(P[i], P[j]) > r:
                bits[i, j >> 6] |= np.uint64(1) << np.uint64(j & 63)
    return bits


def d2c_matrix_decide(P: Sequence[Point], r, metric: str = "l2") -> bool:
    """Do two balls centered at points of P cover P?

    r is the radius for "linf" and the squared radius for "l2".  With
    a[p][z] = (p and z farther apart than r), the pair (p, q) works iff the
    Boolean product entry OR_z a[p][z] and a[z][q] is false; rows are packed
    into 64-bit words.
    """
    if metric not in ("l2", "linf"):
        raise ValueError(f"unknown metric {metric!r}")
    P = list(P)
    if len(P) <= 2:
        return True
    A = _far_bits(P, rational(r), metric)
    for p in range(len(P)):
        hit = np.bitwise_and(A, A[p]).any(axis=1)
        if not hit.all():
            return True
    return False


__all__ = ["CenterSolution", "rect_d3c_decide", "rect_d3c_optimize", "euclid_dkc_brute",
           "d2c_matrix_decide", "SortedMatrixUnion", "candidate_diameters"]
