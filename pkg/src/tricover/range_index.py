"""Static orthogonal range structures in rank space.

Point side: a merge-sort tree over the x-order of the points (storing y ranks)
and one over the y-order (storing x ranks).  Axis extremes over a query box
are "first/last position in a slab whose other coordinate falls in a range",
answered in O(log^2 n).

Rectangle side: enclosure of a box b by a rectangle r is 4D dominance of the
key (r.xlo, -r.xhi, r.ylo, -r.yhi) by (b.xlo, -b.xhi, b.ylo, -b.yhi).  General
rectangles use a k-d tree with per-node top-3 (weight, index) pruning.  Unit
squares use a 2D range tree because their two x keys (and two y keys) move
together.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numba as nb
import numpy as np
from numba import njit

from .geom_core import (BBox, ExtRect, Point, DimensionError, is_finite, rational)

I64 = np.int64

# --------------------------------------------------------------------------
# merge-sort tree over aligned power-of-two blocks


@njit(cache=True)
def _num_levels(n):
    levels = 1
    while (1 << (levels - 1)) < n:
        levels += 1
    return levels


@njit(cache=True)
def mst_build(vals):
    n = vals.shape[0]
    nl = _num_levels(max(n, 1))
    lv = np.empty((nl, max(n, 1)), dtype=np.int64)
    if n == 0:
        lv[:, :] = 0
        return lv
    lv[0, :n] = vals
    for k in range(1, nl):
        size = 1 << k
        half = size >> 1
        for start in range(0, n, size):
            mid = min(start + half, n)
            end = min(start + size, n)
            i = start
            j = mid
            o = start
            while i < mid and j < end:
                if lv[k - 1, i] <= lv[k - 1, j]:
                    lv[k, o] = lv[k - 1, i]
                    i += 1
                else:
                    lv[k, o] = lv[k - 1, j]
                    j += 1
                o += 1
            while i < mid:
                lv[k, o] = lv[k - 1, i]
                i += 1
                o += 1
            while j < end:
                lv[k, o] = lv[k - 1, j]
                j += 1
                o += 1
    return lv


@njit(cache=True, inline="always")
def _lower(arr, a, b, v):
    # first index in [a, b) with arr[i] >= v
    while a < b:
        m = (a + b) >> 1
        if arr[m] < v:
            a = m + 1
        else:
            b = m
    return a


@njit(cache=True, inline="always")
def _upper(arr, a, b, v):
    # first index in [a, b) with arr[i] > v
    while a < b:
        m = (a + b) >> 1
        if arr[m] <= v:
            a = m + 1
        else:
            b = m
    return a


@njit(cache=True)
def _block_has(arr, a, b, lo, hi):
    if a >= b or arr[a] > hi or arr[b - 1] < lo:
        return False
    if arr[a] >= lo:
        return True
    i = _lower(arr, a, b, lo)
    return i < b and arr[i] <= hi


@njit(cache=True)
def mst_first(lv, n, s, e, lo, hi):
    """First position p in [s, e] whose value lies in [lo, hi], else -1."""
    if s < 0:
        s = 0
    if e > n - 1:
        e = n - 1
    if s > e or lo > hi:
        return -1
    nl = lv.shape[0]
    p = s
    while p <= e:
        k = 0
        while k + 1 < nl and (p & ((1 << (k + 1)) - 1)) == 0 and p + (1 << (k + 1)) - 1 <= e:
            k += 1
        end = p + (1 << k)
        if _block_has(lv[k], p, end, lo, hi):
            a = p
            b = end
            while k > 0:
                mid = a + (1 << (k - 1))
                if mid > b:
                    mid = b
                if _block_has(lv[k - 1], a, mid, lo, hi):
                    b = mid
                else:
                    a = mid
                k -= 1
            return a
        p = end
    return -1


@njit(cache=True)
def mst_last(lv, n, s, e, lo, hi):
    """Last position p in [s, e] whose value lies in [lo, hi], else -1."""
    if s < 0:
        s = 0
    if e > n - 1:
        e = n - 1
    if s > e or lo > hi:
        return -1
    nl = lv.shape[0]
    q = e + 1  # exclusive end
    while q > s:
        k = 0
        while k + 1 < nl and (q & ((1 << (k + 1)) - 1)) == 0 and q - (1 << (k + 1)) >= s:
            k += 1
        start = q - (1 << k)
        if _block_has(lv[k], start, q, lo, hi):
            a = start
            b = q
            while k > 0:
                mid = a + (1 << (k - 1))
                if _block_has(lv[k - 1], mid, b, lo, hi):
                    a = mid
                else:
                    b = mid
                k -= 1
            return a
        q = start
    return -1


@njit(cache=True)
def mst_count(lv, n, s, e, lo, hi):
    if s < 0:
        s = 0
    if e > n - 1:
        e = n - 1
    if s > e or lo > hi:
        return 0
    nl = lv.shape[0]
    total = 0
    p = s
    while p <= e:
        k = 0
        while k + 1 < nl and (p & ((1 << (k + 1)) - 1)) == 0 and p + (1 << (k + 1)) - 1 <= e:
            k += 1
        end = p + (1 << k)
        total += _upper(lv[k], p, end, hi) - _lower(lv[k], p, end, lo)
        p = end
    return total


# --------------------------------------------------------------------------
# point structure

PointStruct = namedtuple("PointStruct", [
    "n", "K", "L",          # point count, x-rank count, y-rank count
    "px", "py",             # ranks by point index
    "ordx", "ordy",         # point indices sorted by (x, y) / (y, x)
    "xsx", "ysy",           # x ranks in x order, y ranks in y order
    "fpx", "fpy",           # rank -> first position with coordinate >= rank (length K+1 / L+1)
    "mstx", "msty",         # merge-sort trees: y ranks over x order, x ranks over y order
])


@njit(cache=True)
def _first_pos_table(sorted_vals, size):
    out = np.empty(size + 1, dtype=np.int64)
    j = 0
    n = sorted_vals.shape[0]
    for r in range(size + 1):
        while j < n and sorted_vals[j] < r:
            j += 1
        out[r] = j
    return out


def build_point_struct(px: np.ndarray, py: np.ndarray, K: int, L: int) -> PointStruct:
    px = np.ascontiguousarray(px, dtype=I64)
    py = np.ascontiguousarray(py, dtype=I64)
    n = px.shape[0]
    ordx = np.lexsort((py, px)).astype(I64)
    ordy = np.lexsort((px, py)).astype(I64)
    xsx = px[ordx]
    ysy = py[ordy]
    return PointStruct(
        n, K, L, px, py, ordx, ordy, xsx, ysy,
        _first_pos_table(xsx, K), _first_pos_table(ysy, L),
        mst_build(py[ordx]), mst_build(px[ordy]))


@njit(cache=True)
def ps_box_extremes(S, xa, xb, ya, yb, out):
    """Extremes of points with x rank in [xa, xb] and y rank in [ya, yb].

    Writes (minx, maxx, miny, maxy) to out and returns the emptiness flag as
    False when some point exists.
    """
    if xa < 0:
        xa = 0
    if ya < 0:
        ya = 0
    if xb > S.K - 1:
        xb = S.K - 1
    if yb > S.L - 1:
        yb = S.L - 1
    if S.n == 0 or xa > xb or ya > yb:
        return True
    s = S.fpx[xa]
    e = S.fpx[xb + 1] - 1
    p = mst_first(S.mstx, S.n, s, e, ya, yb)
    if p < 0:
        return True
    q = mst_last(S.mstx, S.n, s, e, ya, yb)
    out[0] = S.xsx[p]
    out[1] = S.xsx[q]
    s = S.fpy[ya]
    e = S.fpy[yb + 1] - 1
    out[2] = S.ysy[mst_first(S.msty, S.n, s, e, xa, xb)]
    out[3] = S.ysy[mst_last(S.msty, S.n, s, e, xa, xb)]
    return False


@njit(cache=True)
def ps_box_count(S, xa, xb, ya, yb):
    if xa < 0:
        xa = 0
    if ya < 0:
        ya = 0
    if xb > S.K - 1:
        xb = S.K - 1
    if yb > S.L - 1:
        yb = S.L - 1
    if S.n == 0 or xa > xb or ya > yb:
        return 0
    return mst_count(S.mstx, S.n, S.fpx[xa], S.fpx[xb + 1] - 1, ya, yb)


@njit(cache=True)
def ps_union_extremes(S, boxes, nb_, out):
    """Extremes over the union of nb_ rank boxes (rows of boxes: xa, xb, ya, yb)."""
    empty = True
    tmp = np.empty(4, dtype=np.int64)
    for i in range(nb_):
        if not ps_box_extremes(S, boxes[i, 0], boxes[i, 1], boxes[i, 2], boxes[i, 3], tmp):
            if empty:
                out[0] = tmp[0]
                out[1] = tmp[1]
                out[2] = tmp[2]
                out[3] = tmp[3]
                empty = False
            else:
                out[0] = min(out[0], tmp[0])
                out[1] = max(out[1], tmp[1])
                out[2] = min(out[2], tmp[2])
                out[3] = max(out[3], tmp[3])
    return empty


# --------------------------------------------------------------------------
# enclosure structures; weights are int64, ties broken by index

@njit(cache=True, inline="always")
def better(w, a, b):
    """(w[a], a) < (w[b], b), with -1 standing for +infinity."""
    if a < 0:
        return False
    if b < 0:
        return True
    if w[a] != w[b]:
        return w[a] < w[b]
    return a < b


@njit(cache=True)
def insert3(w, best, x):
    # keep best[0..2] sorted, ignoring duplicates
    if x < 0 or x == best[0] or x == best[1] or x == best[2]:
        return
    if better(w, x, best[0]):
        best[2] = best[1]
        best[1] = best[0]
        best[0] = x
    elif better(w, x, best[1]):
        best[2] = best[1]
        best[1] = x
    elif better(w, x, best[2]):
        best[2] = x


KDTree = namedtuple("KDTree", [
    "m", "keys", "w", "perm", "lo", "hi", "left", "right", "kmin", "kmax", "top",
])

_LEAF = 8


@njit(cache=True)
def _kd_build_arrays(keys, w):
    m = keys.shape[0]
    perm = np.arange(m).astype(np.int64)
    cap = max(1, 4 * (m // _LEAF + 1))
    lo = np.empty(cap, dtype=np.int64)
    hi = np.empty(cap, dtype=np.int64)
    left = np.full(cap, -1, dtype=np.int64)
    right = np.full(cap, -1, dtype=np.int64)
    kmin = np.empty((cap, 4), dtype=np.int64)
    kmax = np.empty((cap, 4), dtype=np.int64)
    top = np.full((cap, 3), -1, dtype=np.int64)
    if m == 0:
        lo[0] = 0
        hi[0] = 0
        kmin[0, :] = 1 << 60
        kmax[0, :] = -(1 << 60)
        return perm, lo, hi, left, right, kmin, kmax, top, 1
    stack = np.empty(cap, dtype=np.int64)
    nodes = 1
    lo[0] = 0
    hi[0] = m
    sp = 0
    stack[sp] = 0
    sp += 1
    while sp > 0:
        sp -= 1
        nd = stack[sp]
        a = lo[nd]
        b = hi[nd]
        for d in range(4):
            mn = keys[perm[a], d]
            mx = mn
            for t in range(a + 1, b):
                v = keys[perm[t], d]
                if v < mn:
                    mn = v
                if v > mx:
                    mx = v
            kmin[nd, d] = mn
            kmax[nd, d] = mx
        best = np.full(3, -1, dtype=np.int64)
        for t in range(a, b):
            insert3(w, best, perm[t])
        top[nd, 0] = best[0]
        top[nd, 1] = best[1]
        top[nd, 2] = best[2]
        if b - a <= _LEAF:
            continue
        sd = 0
        spread = -1
        for d in range(4):
            if kmax[nd, d] - kmin[nd, d] > spread:
                spread = kmax[nd, d] - kmin[nd, d]
                sd = d
        if spread == 0:
            continue
        sub = perm[a:b].copy()
        vals = np.empty(b - a, dtype=np.int64)
        for t in range(b - a):
            vals[t] = keys[sub[t], sd]
        o = np.argsort(vals, kind="mergesort")
        for t in range(b - a):
            perm[a + t] = sub[o[t]]
        mid = (a + b) // 2
        l = nodes
        r = nodes + 1
        nodes += 2
        lo[l] = a
        hi[l] = mid
        lo[r] = mid
        hi[r] = b
        left[nd] = l
        right[nd] = r
        stack[sp] = l
        sp += 1
        stack[sp] = r
        sp += 1
    return perm, lo, hi, left, right, kmin, kmax, top, nodes


def kd_build(keys: np.ndarray, w: np.ndarray) -> KDTree:
    keys = np.ascontiguousarray(keys, dtype=I64).reshape(-1, 4)
    w = np.ascontiguousarray(w, dtype=I64)
    perm, lo, hi, left, right, kmin, kmax, top, nodes = _kd_build_arrays(keys, w)
    return KDTree(keys.shape[0], keys, w, perm, lo[:nodes].copy(), hi[:nodes].copy(),
                  left[:nodes].copy(), right[:nodes].copy(), kmin[:nodes].copy(),
                  kmax[:nodes].copy(), top[:nodes].copy())


@njit(cache=True)
def kd_top3(T, q0, q1, q2, q3, best):
    """Fill best with the three smallest (w, index) entries whose key is <= q."""
    best[0] = -1
    best[1] = -1
    best[2] = -1
    if T.m == 0:
        return 0
    w = T.w
    stack = np.empty(64 + 2 * T.lo.shape[0] // _LEAF + 64, dtype=np.int64)
    sp = 0
    stack[sp] = 0
    sp += 1
    while sp > 0:
        sp -= 1
        nd = stack[sp]
        if T.kmin[nd, 0] > q0 or T.kmin[nd, 1] > q1 or T.kmin[nd, 2] > q2 or T.kmin[nd, 3] > q3:
            continue
        if best[2] >= 0 and not better(w, T.top[nd, 0], best[2]):
            continue
        if T.kmax[nd, 0] <= q0 and T.kmax[nd, 1] <= q1 and T.kmax[nd, 2] <= q2 and T.kmax[nd, 3] <= q3:
            for t in range(3):
                insert3(w, best, T.top[nd, t])
            continue
        l = T.left[nd]
        if l < 0:
            for t in range(T.lo[nd], T.hi[nd]):
                x = T.perm[t]
                if (T.keys[x, 0] <= q0 and T.keys[x, 1] <= q1 and T.keys[x, 2] <= q2
                        and T.keys[x, 3] <= q3):
                    insert3(w, best, x)
            continue
        r = T.right[nd]
        if better(w, T.top[l, 0], T.top[r, 0]):
            stack[sp] = r
            stack[sp + 1] = l
        else:
            stack[sp] = l
            stack[sp + 1] = r
        sp += 2
    c = 0
    for t in range(3):
        if best[t] >= 0:
            c += 1
    return c


UnitTree = namedtuple("UnitTree", [
    "m", "w",
    "xlo_s", "xhi_s",      # x sides in x order (both nondecreasing)
    "ylo_s", "yhi_s",      # y sides in y order
    "lvy", "lvid",         # per level: y positions sorted within blocks, element ids
    "sp",                  # sp[level, j, pos]: argmin element over lvid[level, pos: pos + 2^j]
])


@njit(cache=True)
def _unit_build_arrays(iy_by_xpos, id_by_xpos, w):
    m = iy_by_xpos.shape[0]
    nl = _num_levels(max(m, 1))
    lvy = np.empty((nl, max(m, 1)), dtype=np.int64)
    lvid = np.empty((nl, max(m, 1)), dtype=np.int64)
    sp = np.full((nl, nl, max(m, 1)), -1, dtype=np.int32)
    if m == 0:
        return lvy, lvid, sp
    lvy[0, :m] = iy_by_xpos
    lvid[0, :m] = id_by_xpos
    for k in range(1, nl):
        size = 1 << k
        half = size >> 1
        for start in range(0, m, size):
            mid = min(start + half, m)
            end = min(start + size, m)
            i = start
            j = mid
            o = start
            while i < mid or j < end:
                if j >= end or (i < mid and lvy[k - 1, i] <= lvy[k - 1, j]):
                    lvy[k, o] = lvy[k - 1, i]
                    lvid[k, o] = lvid[k - 1, i]
                    i += 1
                else:
                    lvy[k, o] = lvy[k - 1, j]
                    lvid[k, o] = lvid[k - 1, j]
                    j += 1
                o += 1
    for k in range(nl):
        for p in range(m):
            sp[k, 0, p] = lvid[k, p]
        for j in range(1, k + 1):
            step = 1 << (j - 1)
            blk = 1 << k
            for p in range(m):
                q = p + step
                # both halves must stay inside the same level-k block
                if (p + (1 << j) - 1) < m and (p // blk) == ((p + (1 << j) - 1) // blk):
                    a = sp[k, j - 1, p]
                    b = sp[k, j - 1, q]
                    sp[k, j, p] = a if better(w, a, b) else b
    return lvy, lvid, sp


def unit_build(xlo, xhi, ylo, yhi, w) -> UnitTree:
    xlo = np.asarray(xlo, dtype=I64)
    xhi = np.asarray(xhi, dtype=I64)
    ylo = np.asarray(ylo, dtype=I64)
    yhi = np.asarray(yhi, dtype=I64)
    w = np.ascontiguousarray(w, dtype=I64)
    m = xlo.shape[0]
    ox = np.lexsort((np.arange(m), xhi, xlo))
    oy = np.lexsort((np.arange(m), yhi, ylo))
    if m and (np.any(np.diff(xhi[ox]) < 0) or np.any(np.diff(yhi[oy]) < 0)):
        raise ValueError("unit-square enclosure index needs equal-size squares")
    iy = np.empty(m, dtype=I64)
    iy[oy] = np.arange(m)
    lvy, lvid, sp = _unit_build_arrays(iy[ox].astype(I64), ox.astype(I64), w)
    return UnitTree(m, w, xlo[ox].copy(), xhi[ox].copy(), ylo[oy].copy(), yhi[oy].copy(), lvy, lvid, sp)


@njit(cache=True, inline="always")
def _rmq(U, k, a, b):
    # argmin over lvid[k, a..b] inclusive, same block
    ln = b - a + 1
    j = 0
    while (1 << (j + 1)) <= ln:
        j += 1
    x = U.sp[k, j, a]
    y = U.sp[k, j, b - (1 << j) + 1]
    return x if better(U.w, x, y) else y


@njit(cache=True, inline="always")
def unit_top3(U, bxlo, bxhi, bylo, byhi, best):
    best[0] = -1
    best[1] = -1
    best[2] = -1
    m = U.m
    if m == 0:
        return 0
    lx = _lower(U.xhi_s, 0, m, bxhi)
    hx = _upper(U.xlo_s, 0, m, bxlo) - 1
    ly = _lower(U.yhi_s, 0, m, byhi)
    hy = _upper(U.ylo_s, 0, m, bylo) - 1
    if lx > hx or ly > hy:
        return 0
    nl = U.lvy.shape[0]
    # canonical blocks -> candidate intervals (level, a, b)
    iv = np.empty((2 * nl + 8, 3), dtype=np.int64)
    ni = 0
    p = lx
    while p <= hx:
        k = 0
        while k + 1 < nl and (p & ((1 << (k + 1)) - 1)) == 0 and p + (1 << (k + 1)) - 1 <= hx:
            k += 1
        end = p + (1 << k)
        a = _lower(U.lvy[k], p, end, ly)
        b = _upper(U.lvy[k], p, end, hy) - 1
        if a <= b:
            iv[ni, 0] = k
            iv[ni, 1] = a
            iv[ni, 2] = b
            ni += 1
        p = end
    got = 0
    for rnd in range(3):
        bi = -1
        bx = -1
        for t in range(ni):
            if iv[t, 1] > iv[t, 2]:
                continue
            x = _rmq(U, iv[t, 0], iv[t, 1], iv[t, 2])
            if better(U.w, x, bx):
                bx = x
                bi = t
        if bi < 0:
            break
        best[rnd] = bx
        got += 1
        # split the interval around the chosen element
        k = iv[bi, 0]
        a = iv[bi, 1]
        b = iv[bi, 2]
        pos = a
        while U.lvid[k, pos] != bx:
            pos += 1
        iv[bi, 2] = pos - 1
        iv[ni, 0] = k
        iv[ni, 1] = pos + 1
        iv[ni, 2] = b
        ni += 1
    return got


# --------------------------------------------------------------------------
# public, exact-value facing API

def _lo_rank(vals, v, closed):
    if not is_finite(v):
        return 0
    return bisect_left(vals, v) if closed else bisect_right(vals, v)


def _hi_rank(vals, v, closed):
    if not is_finite(v):
        return len(vals) - 1
    return (bisect_right(vals, v) if closed else bisect_left(vals, v)) - 1


class PointIndex:
    """Static index over a planar point multiset."""

    def __init__(self, P: Sequence[Point]):
        P = [tuple(rational(c) for c in p) for p in P]
        for p in P:
            if len(p) != 2:
                raise DimensionError("PointIndex is planar")
        self.points = P
        self.xs = sorted({p[0] for p in P})
        self.ys = sorted({p[1] for p in P})
        xr = {v: i for i, v in enumerate(self.xs)}
        yr = {v: i for i, v in enumerate(self.ys)}
        px = np.array([xr[p[0]] for p in P], dtype=I64)
        py = np.array([yr[p[1]] for p in P], dtype=I64)
        self.struct = build_point_struct(px, py, len(self.xs), len(self.ys))

    def __len__(self):
        return len(self.points)

    def rank_box(self, r: ExtRect) -> tuple:
        if r.dim != 2:
            raise DimensionError("query range must be planar")
        sx, sy = r.sides
        return (_lo_rank(self.xs, sx.lo, sx.lo_closed), _hi_rank(self.xs, sx.hi, sx.hi_closed),
                _lo_rank(self.ys, sy.lo, sy.lo_closed), _hi_rank(self.ys, sy.hi, sy.hi_closed))


def build_point_index(P: Sequence[Point]) -> PointIndex:
    return PointIndex(P)


def extremes_in_ranges(idx: PointIndex, ranges: Sequence[ExtRect]) -> Optional[BBox]:
    ranges = list(ranges)
    if len(ranges) > 25:
        raise ValueError("at most 25 ranges per query")
    if not ranges or len(idx) == 0:
        return None
    boxes = np.array([idx.rank_box(r) for r in ranges], dtype=I64).reshape(-1, 4)
    out = np.zeros(4, dtype=I64)
    if ps_union_extremes(idx.struct, boxes, boxes.shape[0], out):
        return None
    return BBox(idx.xs[out[0]], idx.xs[out[1]], idx.ys[out[2]], idx.ys[out[3]])


def count_in_rect(idx: PointIndex, r: ExtRect) -> int:
    if len(idx) == 0:
        return 0
    xa, xb, ya, yb = idx.rank_box(r)
    return int(ps_box_count(idx.struct, xa, xb, ya, yb))


class EnclosureIndex:
    """Minimum-weight enclosure queries over rectangles with arbitrary open/closed/infinite sides."""

    def __init__(self, R: Sequence[ExtRect]):
        rects = sorted(R, key=lambda r: r.id)
        for r in rects:
            if r.dim != 2:
                raise DimensionError("EnclosureIndex is planar")
        self.rects = rects
        self.vx = sorted({v for r in rects for v in (r.sides[0].lo, r.sides[0].hi) if is_finite(v)})
        self.vy = sorted({v for r in rects for v in (r.sides[1].lo, r.sides[1].hi) if is_finite(v)})
        wvals = sorted({self._w(r) for r in rects})
        wrank = {v: i for i, v in enumerate(wvals)}
        keys = np.array([self._keys(r) for r in rects], dtype=I64).reshape(-1, 4)
        w = np.array([wrank[self._w(r)] for r in rects], dtype=I64)
        self.tree = kd_build(keys, w)

    @staticmethod
    def _w(r):
        return r.weight if r.weight is not None else Fraction(1)

    @staticmethod
    def _lo_key(vals, s_lo, closed):
        if not is_finite(s_lo):
            return -2
        return 2 * bisect_left(vals, s_lo) + (0 if closed else 1)

    @staticmethod
    def _hi_key(vals, s_hi, closed):
        if not is_finite(s_hi):
            return 2 * len(vals) + 2
        return 2 * bisect_left(vals, s_hi) - (0 if closed else 1)

    def _keys(self, r):
        sx, sy = r.sides
        return (self._lo_key(self.vx, sx.lo, sx.lo_closed), -self._hi_key(self.vx, sx.hi, sx.hi_closed),
                self._lo_key(self.vy, sy.lo, sy.lo_closed), -self._hi_key(self.vy, sy.hi, sy.hi_closed))

    @staticmethod
    def _q(vals, q):
        if not is_finite(q):
            return -3 if q < 0 else 2 * len(vals) + 3
        i = bisect_left(vals, q)
        return 2 * i if i < len(vals) and vals[i] == q else 2 * i - 1

    def top3(self, b: BBox) -> list:
        q0 = self._q(self.vx, b.xlo)
        q1 = -self._q(self.vx, b.xhi)
        q2 = self._q(self.vy, b.ylo)
        q3 = -self._q(self.vy, b.yhi)
        best = np.full(3, -1, dtype=I64)
        c = kd_top3(self.tree, q0, q1, q2, q3, best)
        return [self.rects[int(best[i])] for i in range(c)]


def build_enclosure_index(R: Sequence[ExtRect]) -> EnclosureIndex:
    return EnclosureIndex(R)


def min_weight_enclosing(idx: EnclosureIndex, b: BBox) -> Optional[tuple]:
    got = idx.top3(b)
    if not got:
        return None
    r = got[0]
    return r.id, EnclosureIndex._w(r)


__all__ = [
    "PointIndex", "EnclosureIndex", "build_point_index", "extremes_in_ranges", "count_in_rect",
    "build_enclosure_index", "min_weight_enclosing", "PointStruct", "build_point_struct",
    "KDTree", "kd_build", "kd_top3", "UnitTree", "unit_build", "unit_top3", "better", "insert3",
    "ps_box_extremes", "ps_box_count", "ps_union_extremes", "mst_build", "mst_first", "mst_last",
    "mst_count",
]
