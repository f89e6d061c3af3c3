"""Minimum-weight third rectangle completing a cover, given two rectangles.

The remainder P minus (r1 union r2) is bounded by scanning the x- and y-orders
from each end for a few steps; when the scan runs long it falls back to the
complement decomposition (at most 25 cells of the 5x5 grid cut by both
rectangles) and merge-sort-tree queries per cell.  The remainder's bounding
box then goes to the enclosure index.
"""
from __future__ import annotations

from collections import namedtuple
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from numba import njit

from .geom_core import (BBox, ExtRect, Interval, NEG_INF, POS_INF, OpenSideError, Point,
                        check_dims, is_finite, rational)
from .range_index import (better, build_point_struct, insert3, kd_build, kd_top3, mst_first,
                          mst_last, unit_build, unit_top3)

I64 = np.int64
SCAN = 24

RectStruct = namedtuple("RectStruct", [
    "m", "xl", "xh", "yl", "yh", "w",   # rank-space sides (-1 / K for infinite), int64 weights
    "unit", "kd", "ut", "g3",            # enclosure structure choice, global top-3
])


def build_rect_struct(xl, xh, yl, yh, w, unit: bool) -> RectStruct:
    xl, xh, yl, yh, w = (np.ascontiguousarray(a, dtype=I64) for a in (xl, xh, yl, yh, w))
    m = xl.shape[0]
    keys = np.stack([xl, -xh, yl, -yh], axis=1) if m else np.zeros((0, 4), dtype=I64)
    kd = kd_build(keys, w)
    if unit:
        ut = unit_build(xl, xh, yl, yh, w)
    else:
        ut = unit_build(np.zeros(0, I64), np.zeros(0, I64), np.zeros(0, I64), np.zeros(0, I64),
                        np.zeros(0, I64))
    order = sorted(range(m), key=lambda i: (int(w[i]), i))[:3]
    g3 = np.full(3, -1, dtype=I64)
    g3[:len(order)] = order
    return RectStruct(m, xl, xh, yl, yh, w, bool(unit), kd, ut, g3)


@njit(cache=True, inline="always")
def enc_top3(RS, bx0, bx1, by0, by1, best):
    """Three lightest rectangles enclosing the rank box, or the global three when the box is empty (bx0 > bx1)."""
    if bx0 > bx1:
        best[0] = RS.g3[0]
        best[1] = RS.g3[1]
        best[2] = RS.g3[2]
        c = 0
        for t in range(3):
            if best[t] >= 0:
                c += 1
        return c
    if RS.unit:
        return unit_top3(RS.ut, bx0, bx1, by0, by1, best)
    return kd_top3(RS.kd, bx0, -bx1, by0, -by1, best)


@njit(cache=True, inline="always")
def first_not(best, a, b):
    for t in range(3):
        x = best[t]
        if x >= 0 and x != a and x != b:
            return x
    return -1


@njit(cache=True, inline="always")
def _covered(x, y, r):
    return r[0] <= x and x <= r[1] and r[2] <= y and y <= r[3]


@njit(cache=True)
def _decompose(S, q, a, b, boxes):
    # cells of q cut by the sides of a and b that lie outside both
    xc = np.empty(6, dtype=np.int64)
    yc = np.empty(6, dtype=np.int64)
    nx = 0
    ny = 0
    x0 = max(q[0], 0)
    x1 = min(q[1], S.K - 1) + 1
    y0 = max(q[2], 0)
    y1 = min(q[3], S.L - 1) + 1
    xc[nx] = x0
    nx += 1
    xc[nx] = x1
    nx += 1
    yc[ny] = y0
    ny += 1
    yc[ny] = y1
    ny += 1
    for r in (a, b):
        if r[0] > r[1] or r[2] > r[3]:
            continue
        for v in (r[0], r[1] + 1):
            if x0 < v and v < x1:
                xc[nx] = v
                nx += 1
        for v in (r[2], r[3] + 1):
            if y0 < v and v < y1:
                yc[ny] = v
                ny += 1
    xs = np.sort(xc[:nx])
    ys = np.sort(yc[:ny])
    nb = 0
    for i in range(nx - 1):
        if xs[i] == xs[i + 1]:
            continue
        for j in range(ny - 1):
            if ys[j] == ys[j + 1]:
                continue
            cx0 = xs[i]
            cx1 = xs[i + 1] - 1
            cy0 = ys[j]
            cy1 = ys[j + 1] - 1
            ina = a[0] <= cx0 and cx1 <= a[1] and a[2] <= cy0 and cy1 <= a[3]
            inb = b[0] <= cx0 and cx1 <= b[1] and b[2] <= cy0 and cy1 <= b[3]
            if not (ina or inb):
                boxes[nb, 0] = cx0
                boxes[nb, 1] = cx1
                boxes[nb, 2] = cy0
                boxes[nb, 3] = cy1
                nb += 1
    return nb


@njit(cache=True)
def region_bbox(S, q, a, b, out):
    """Bounding box (rank space) of points in box q not covered by a or b.

    Boxes are int64 arrays (xlo, xhi, ylo, yhi); an empty box such as
    (1, 0, 1, 0) stands for "no rectangle".  Returns True when the region holds no point.
    """
    if S.n == 0:
        return True
    x0 = max(q[0], 0)
    x1 = min(q[1], S.K - 1)
    y0 = max(q[2], 0)
    y1 = min(q[3], S.L - 1)
    if x0 > x1 or y0 > y1:
        return True
    sx = S.fpx[x0]
    ex = S.fpx[x1 + 1] - 1
    sy = S.fpy[y0]
    ey = S.fpy[y1 + 1] - 1
    if sx > ex or sy > ey:
        return True
    boxes = np.empty((0, 4), dtype=np.int64)
    nb = -1
    # min x
    found = -1
    p = sx
    lim = min(ex, sx + SCAN)
    while p <= lim:
        j = S.ordx[p]
        y = S.py[j]
        if y0 <= y and y <= y1 and not _covered(S.px[j], y, a) and not _covered(S.px[j], y, b):
            found = p
            break
        p += 1
    if found >= 0:
        out[0] = S.xsx[found]
    elif lim == ex:
        return True
    else:
        boxes = np.empty((25, 4), dtype=np.int64)
        nb = _decompose(S, q, a, b, boxes)
        bestp = -1
        for t in range(nb):
            pp = mst_first(S.mstx, S.n, S.fpx[boxes[t, 0]], S.fpx[boxes[t, 1] + 1] - 1,
                           boxes[t, 2], boxes[t, 3])
            if pp >= 0 and (bestp < 0 or pp < bestp):
                bestp = pp
        if bestp < 0:
            return True
        out[0] = S.xsx[bestp]
    # max x
    found = -1
    p = ex
    lim = max(sx, ex - SCAN)
    while p >= lim:
        j = S.ordx[p]
        y = S.py[j]
        if y0 <= y and y <= y1 and not _covered(S.px[j], y, a) and not _covered(S.px[j], y, b):
            found = p
            break
        p -= 1
    if found >= 0:
        out[1] = S.xsx[found]
    else:
        if nb < 0:
            boxes = np.empty((25, 4), dtype=np.int64)
            nb = _decompose(S, q, a, b, boxes)
        bestp = -1
        for t in range(nb):
            pp = mst_last(S.mstx, S.n, S.fpx[boxes[t, 0]], S.fpx[boxes[t, 1] + 1] - 1,
                          boxes[t, 2], boxes[t, 3])
            if pp > bestp:
                bestp = pp
        out[1] = S.xsx[bestp]
    # min y
    found = -1
    p = sy
    lim = min(ey, sy + SCAN)
    while p <= lim:
        j = S.ordy[p]
        x = S.px[j]
        if x0 <= x and x <= x1 and not _covered(x, S.py[j], a) and not _covered(x, S.py[j], b):
            found = p
            break
        p += 1
    if found >= 0:
        out[2] = S.ysy[found]
    else:
        if nb < 0:
            boxes = np.empty((25, 4), dtype=np.int64)
            nb = _decompose(S, q, a, b, boxes)
        bestp = -1
        for t in range(nb):
            pp = mst_first(S.msty, S.n, S.fpy[boxes[t, 2]], S.fpy[boxes[t, 3] + 1] - 1,
                           boxes[t, 0], boxes[t, 1])
            if pp >= 0 and (bestp < 0 or pp < bestp):
                bestp = pp
        out[2] = S.ysy[bestp]
    # max y
    found = -1
    p = ey
    lim = max(sy, ey - SCAN)
    while p >= lim:
        j = S.ordy[p]
        x = S.px[j]
        if x0 <= x and x <= x1 and not _covered(x, S.py[j], a) and not _covered(x, S.py[j], b):
            found = p
            break
        p -= 1
    if found >= 0:
        out[3] = S.ysy[found]
    else:
        if nb < 0:
            boxes = np.empty((25, 4), dtype=np.int64)
            nb = _decompose(S, q, a, b, boxes)
        bestp = -1
        for t in range(nb):
            pp = mst_last(S.msty, S.n, S.fpy[boxes[t, 2]], S.fpy[boxes[t, 3] + 1] - 1,
                          boxes[t, 0], boxes[t, 1])
            if pp > bestp:
                bestp = pp
        out[3] = S.ysy[bestp]
    return False


@njit(cache=True, inline="always")
def rect_box(RS, i, out):
    if i < 0:
        out[0] = 1
        out[1] = 0
        out[2] = 1
        out[3] = 0
    else:
        out[0] = RS.xl[i]
        out[1] = RS.xh[i]
        out[2] = RS.yl[i]
        out[3] = RS.yh[i]


@njit(cache=True, inline="always")
def third_for_boxes_ws(S, RS, a, b, ia, ib, ws):
    """Lightest rectangle other than ia, ib covering P minus (a union b); -1 if none.

    ws is scratch space of at least 11 int64 slots.
    """
    q = ws[0:4]
    bb = ws[4:8]
    best = ws[8:11]
    q[0] = 0
    q[1] = S.K - 1
    q[2] = 0
    q[3] = S.L - 1
    if region_bbox(S, q, a, b, bb):
        enc_top3(RS, 1, 0, 1, 0, best)
    else:
        enc_top3(RS, bb[0], bb[1], bb[2], bb[3], best)
    return first_not(best, ia, ib)


@njit(cache=True)
def third_for_boxes(S, RS, a, b, ia, ib):
    return third_for_boxes_ws(S, RS, a, b, ia, ib, np.empty(11, dtype=np.int64))


@njit(cache=True, inline="always")
def best_third_ws(S, RS, i, j, ws):
    """best_third_idx with caller-provided scratch space (at least 19 int64 slots)."""
    a = ws[11:15]
    b = ws[15:19]
    rect_box(RS, i, a)
    rect_box(RS, j, b)
    return third_for_boxes_ws(S, RS, a, b, i, j, ws)


@njit(cache=True)
def best_third_idx(S, RS, i, j):
    return best_third_ws(S, RS, i, j, np.empty(19, dtype=np.int64))


# --------------------------------------------------------------------------
# exact-value front end

def complement_decomposition(r1: ExtRect, r2: ExtRect, B0: BBox) -> list:
    """Disjoint closed/open pieces of B0 minus (r1 union r2), from the cut grid of both rectangles."""
    for r in (r1, r2):
        if r.dim != 2:
            raise ValueError("planar rectangles required")
        if not r.is_closed:
            raise OpenSideError("complement_decomposition needs closed rectangles")
    out = []
    axes = []
    for d, (lo, hi) in enumerate(((B0.xlo, B0.xhi), (B0.ylo, B0.yhi))):
        # elementary intervals of [lo, hi] cut at every side of r1, r2 inside it
        cuts = set()
        for r in (r1, r2):
            s = r.sides[d]
            if is_finite(s.lo) and lo < s.lo <= hi:
                cuts.add(("lo", s.lo))
            if is_finite(s.hi) and lo <= s.hi < hi:
                cuts.add(("hi", s.hi))
        # breakpoints: a closed lower side at v starts a piece at v (piece before ends open at v);
        # a closed upper side at v ends a piece at v (next piece starts open at v)
        events = sorted({(v, 0 if k == "lo" else 1) for k, v in cuts})
        pieces = []
        cur_lo, cur_closed = lo, True
        for v, kind in events:
            if kind == 0:
                if v > cur_lo:
                    pieces.append(Interval(cur_lo, v, cur_closed, False))
                cur_lo, cur_closed = v, True
            else:
                if v > cur_lo or cur_closed:
                    pieces.append(Interval(cur_lo, v, cur_closed, True))
                cur_lo, cur_closed = v, False
        if cur_lo < hi or (cur_lo == hi and cur_closed):
            pieces.append(Interval(cur_lo, hi, cur_closed, True))
        axes.append(pieces)
    for ix in axes[0]:
        for iy in axes[1]:
            inside = any(r.sides[0].includes(ix) and r.sides[1].includes(iy) for r in (r1, r2))
            if not inside:
                out.append(ExtRect((ix, iy)))
    return out


class PairOracle:
    """Point index over P, enclosure index over R, and the bounding box B0 of P."""

    def __init__(self, P: Sequence[Point], R: Sequence[ExtRect]):
        check_dims(P, R, 2)
        self.P = [tuple(rational(c) for c in p) for p in P]
        self.rects = sorted(R, key=lambda r: r.id)
        for r in self.rects:
            if not r.is_closed:
                raise OpenSideError(f"rectangle {r.id} has an open side")
        self.B0 = BBox.of_points(self.P)
        self.xs = sorted({p[0] for p in self.P})
        self.ys = sorted({p[1] for p in self.P})
        xr = {v: i for i, v in enumerate(self.xs)}
        yr = {v: i for i, v in enumerate(self.ys)}
        self.S = build_point_struct(np.array([xr[p[0]] for p in self.P], dtype=I64),
                                    np.array([yr[p[1]] for p in self.P], dtype=I64),
                                    len(self.xs), len(self.ys))
        wv = sorted({self._w(r) for r in self.rects})
        wr = {v: i for i, v in enumerate(wv)}
        boxes = [self.rank_box(r) for r in self.rects]
        self.RS = build_rect_struct([b[0] for b in boxes], [b[1] for b in boxes],
                                    [b[2] for b in boxes], [b[3] for b in boxes],
                                    [wr[self._w(r)] for r in self.rects], False)

    @staticmethod
    def _w(r):
        return r.weight if r.weight is not None else Fraction(1)

    def rank_box(self, r: ExtRect) -> tuple:
        from bisect import bisect_left, bisect_right
        out = []
        for d, vals in ((0, self.xs), (1, self.ys)):
            s = r.sides[d]
            lo = -1 if not is_finite(s.lo) else bisect_left(vals, s.lo)
            hi = len(vals) if not is_finite(s.hi) else bisect_right(vals, s.hi) - 1
            out += [lo, hi]
        return tuple(out)

    def best_third(self, r1: ExtRect, r2: ExtRect) -> Optional[tuple]:
        a = np.array(self.rank_box(r1), dtype=I64)
        b = np.array(self.rank_box(r2), dtype=I64)
        ids = {r.id: k for k, r in enumerate(self.rects)}
        ia = ids.get(r1.id, -1) if r1.id is not None else -1
        ib = ids.get(r2.id, -1) if r2.id is not None else -1
        if not self.P:
            best = np.empty(3, dtype=I64)
            enc_top3(self.RS, 1, 0, 1, 0, best)
            k = int(first_not(best, ia, ib))
        else:
            k = int(third_for_boxes(self.S, self.RS, a, b, ia, ib))
        if k < 0:
            return None
        r = self.rects[k]
        return r.id, self._w(r)


def build_pair_oracle(P, R) -> PairOracle:
    return PairOracle(P, R)


def best_third(po: PairOracle, r1: ExtRect, r2: ExtRect) -> Optional[tuple]:
    """Lightest r3 in R (other than r1, r2) with P inside r1 | r2 | r3; ties by smallest id."""
    return po.best_third(r1, r2)


__all__ = ["PairOracle", "build_pair_oracle", "best_third", "complement_decomposition",
           "RectStruct", "build_rect_struct", "enc_top3", "first_not", "region_bbox",
           "third_for_boxes", "best_third_idx", "rect_box"]
