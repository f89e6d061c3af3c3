"""Non-uniform grid over rectangle edges, edge extension, maximal filtering and gamma cells.

Columns are half-open ``[b_i, b_{i+1})`` in x; a coordinate equal to a boundary
belongs to the column above it.  The solver engine works on rank-space copies
of everything here (``GridStruct``).
"""
from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from numba import njit

from .geom_core import (BBox, ExtRect, Interval, NEG_INF, POS_INF, OpenSideError, Point,
                        is_finite, rect_encloses)
from .range_index import PointIndex, kd_build, kd_top3

I64 = np.int64
BIG = 1 << 30


def extend_rects(R: Sequence[ExtRect], B0: Optional[BBox]) -> list:
    """Replace every side at or beyond the matching side of B0 by an infinite one.

    The covered subset of the points inside B0 is unchanged because sides are closed.
    """
    if B0 is None:
        return list(R)
    out = []
    for r in R:
        sx, sy = r.sides
        if not r.is_closed:
            raise OpenSideError(f"rectangle {r.id} has an open side")
        nx = Interval(NEG_INF if sx.lo <= B0.xlo else sx.lo, POS_INF if sx.hi >= B0.xhi else sx.hi)
        ny = Interval(NEG_INF if sy.lo <= B0.ylo else sy.lo, POS_INF if sy.hi >= B0.yhi else sy.hi)
        out.append(r.with_sides((nx, ny)))
    return out


def grid_boundaries(vals: np.ndarray, n_rects: int, g: int) -> np.ndarray:
    """Column starts (rank space): 0 plus every k-th entry of the sorted vertex multiset."""
    g = max(1, int(g))
    k = max(1, math.ceil(4 * max(n_rects, 1) / g))
    vals = np.sort(np.asarray(vals, dtype=I64))
    picks = vals[k::k] if vals.size else vals
    starts = np.unique(np.concatenate([np.zeros(1, dtype=I64), picks]))
    return starts[starts >= 0]


@dataclass(frozen=True)
class Grid:
    """Column/row boundaries as extended scalars plus each rectangle's edge columns and rows.

    ``col_bounds[0]`` is -inf and ``col_bounds[-1]`` is +inf; column i is
    ``[col_bounds[i], col_bounds[i+1])``.  ``edge_cols[k]`` holds the columns of
    rectangle k's left and right sides (-1 / ncols for infinite sides);
    ``edge_rows`` likewise.
    """
    col_bounds: tuple
    row_bounds: tuple
    edge_cols: tuple
    edge_rows: tuple
    rect_ids: tuple
    k_occupancy: int

    @property
    def ncols(self) -> int:
        return len(self.col_bounds) - 1

    @property
    def nrows(self) -> int:
        return len(self.row_bounds) - 1

    def column_of(self, x: Fraction) -> int:
        return bisect_right(self.col_bounds, x, 1, self.ncols) - 1

    def row_of(self, y: Fraction) -> int:
        return bisect_right(self.row_bounds, y, 1, self.nrows) - 1

    def cell_of(self, p: Point) -> tuple:
        return self.column_of(p[0]), self.row_of(p[1])


def build_grid(R_extended: Sequence[ExtRect], g: int) -> Grid:
    if g < 1:
        raise ValueError("g must be at least 1")
    R = list(R_extended)
    k = max(1, math.ceil(4 * max(len(R), 1) / g))
    bounds = []
    for d in (0, 1):
        vals = sorted(v for r in R for v in (r.sides[d].lo, r.sides[d].hi) if is_finite(v))
        vals = [v for v in vals for _ in range(2)]  # each side carries two vertices
        picks = sorted(set(vals[k::k]))
        bounds.append(tuple([NEG_INF] + picks + [POS_INF]))
    cols, rows = bounds

    def idx(b, v, lo_side):
        if not is_finite(v):
            return -1 if v < 0 else len(b) - 1
        return bisect_right(b, v, 1, len(b) - 1) - 1

    ec = tuple((idx(cols, r.sides[0].lo, True), idx(cols, r.sides[0].hi, False)) for r in R)
    er = tuple((idx(rows, r.sides[1].lo, True), idx(rows, r.sides[1].hi, False)) for r in R)
    return Grid(cols, rows, ec, er, tuple(r.id for r in R), k)


def occupancy(grid: Grid, R_extended: Sequence[ExtRect]) -> tuple:
    """Largest number of rectangle vertices strictly inside one column / one row."""
    out = []
    for d, b in ((0, grid.col_bounds), (1, grid.row_bounds)):
        counts = [0] * (len(b) - 1)
        for r in R_extended:
            for v in (r.sides[d].lo, r.sides[d].hi):
                if not is_finite(v):
                    continue
                i = bisect_right(b, v, 1, len(b) - 1) - 1
                if b[i] < v:  # interior, not on the boundary line
                    counts[i] += 2
        out.append(max(counts) if counts else 0)
    return tuple(out)


def maximal_filter(R: Sequence[ExtRect]) -> list:
    """Rectangles not strictly contained in another rectangle of R (duplicates all survive)."""
    R = list(R)
    if not R:
        return []
    vx = sorted({v for r in R for v in (r.sides[0].lo, r.sides[0].hi) if is_finite(v)})
    vy = sorted({v for r in R for v in (r.sides[1].lo, r.sides[1].hi) if is_finite(v)})

    def lo_key(vals, s):
        return -2 if not is_finite(s.lo) else 2 * bisect_left(vals, s.lo) + (0 if s.lo_closed else 1)

    def hi_key(vals, s):
        return 2 * len(vals) + 2 if not is_finite(s.hi) else 2 * bisect_left(vals, s.hi) - (0 if s.hi_closed else 1)

    keys = [(lo_key(vx, r.sides[0]), -hi_key(vx, r.sides[0]), lo_key(vy, r.sides[1]),
             -hi_key(vy, r.sides[1])) for r in R]
    distinct = sorted(set(keys))
    kidx = {k: i for i, k in enumerate(distinct)}
    T = kd_build(np.array(distinct, dtype=I64).reshape(-1, 4), np.zeros(len(distinct), dtype=I64))
    best = np.full(3, -1, dtype=I64)
    keep = []
    for r, key in zip(R, keys):
        # the key itself always dominates; a second distinct dominating key means strict containment
        c = kd_top3(T, key[0], key[1], key[2], key[3], best)
        if c < 2:
            keep.append(r)
    return keep


def count_maximal_grid_points(S: Sequence[tuple], g: int) -> int:
    """Points of S (in {1..g}^d) not strictly dominated, in every coordinate, by another point of S."""
    pts = sorted(set(tuple(int(c) for c in p) for p in S))
    for p in pts:
        if any(c < 1 or c > g for c in p):
            raise ValueError(f"point {p} outside the grid")
    if not pts:
        return 0
    d = len(pts[0])
    if d == 2:
        # sweep by decreasing x; strictly larger x with strictly larger y dominates
        pts.sort(key=lambda p: (-p[0], -p[1]))
        count = 0
        best_above = -1  # max y among points with strictly larger x
        i = 0
        while i < len(pts):
            j = i
            while j < len(pts) and pts[j][0] == pts[i][0]:
                j += 1
            for q in pts[i:j]:
                if not q[1] < best_above:
                    count += 1
            best_above = max(best_above, max(q[1] for q in pts[i:j]))
            i = j
        return count
    return sum(1 for p in pts if not any(all(a > b for a, b in zip(q, p)) for q in pts))


# --------------------------------------------------------------------------
# rank-space grid structure used by the engine

GridStruct = namedtuple("GridStruct", [
    "G", "H", "colstart", "rowstart", "colmap", "rowmap",
    "cxl", "cxh", "ryl", "ryh",            # per-rectangle column/row signature
    "cnt",                                  # 2D prefix counts, shape (G+1, H+1)
    "st",                                   # sparse tables (4, LX, LY, G, H): minx, -maxx, miny, -maxy
    "vptr", "vrect", "vlo", "vhi",          # vertical edges by column with row span
    "hptr", "hrect", "hlo", "hhi",          # horizontal edges by row with column span
    "c1ptr", "c1rect", "r1ptr", "r1rect",   # distinct rectangles with a vertical (horizontal) edge per column (row)
    "cptr", "c_px", "c_py", "c_mn", "c_mx",  # points by (column, y); block min/max of x
    "rptr", "r_px", "r_py", "r_mn", "r_mx",  # points by (row, x); block min/max of y
])


@njit(cache=True)
def _minmax_levels(vals):
    n = vals.shape[0]
    nl = 1
    while (1 << (nl - 1)) < max(n, 1):
        nl += 1
    mn = np.empty((nl, max(n, 1)), dtype=np.int64)
    mx = np.empty((nl, max(n, 1)), dtype=np.int64)
    if n == 0:
        return mn, mx
    mn[0, :n] = vals
    mx[0, :n] = vals
    for k in range(1, nl):
        size = 1 << k
        half = size >> 1
        for p in range(0, n, size):
            a = mn[k - 1, p]
            b = mx[k - 1, p]
            if p + half < n:
                a = min(a, mn[k - 1, p + half])
                b = max(b, mx[k - 1, p + half])
            mn[k, p] = a
            mx[k, p] = b
    return mn, mx


@njit(cache=True)
def first_outside(mn, mx, n, s, e, lo, hi):
    """First position in [s, e] whose value is < lo or > hi; -1 if none."""
    if s > e:
        return -1
    nl = mn.shape[0]
    p = s
    while p <= e:
        k = 0
        while k + 1 < nl and (p & ((1 << (k + 1)) - 1)) == 0 and p + (1 << (k + 1)) - 1 <= e:
            k += 1
        if mn[k, p] < lo or mx[k, p] > hi:
            a = p
            while k > 0:
                k -= 1
                if mn[k, a] < lo or mx[k, a] > hi:
                    pass
                else:
                    a = a + (1 << k)
            return a
        p += 1 << k
    return -1


@njit(cache=True)
def last_outside(mn, mx, n, s, e, lo, hi):
    if s > e:
        return -1
    nl = mn.shape[0]
    q = e + 1
    while q > s:
        k = 0
        while k + 1 < nl and (q & ((1 << (k + 1)) - 1)) == 0 and q - (1 << (k + 1)) >= s:
            k += 1
        start = q - (1 << k)
        if mn[k, start] < lo or mx[k, start] > hi:
            a = start
            while k > 0:
                k -= 1
                right = a + (1 << k)
                if right < n and (mn[k, right] < lo or mx[k, right] > hi):
                    a = right
            return a
        q = start
    return -1


@njit(cache=True)
def _cell_tables(G, H, ci, rj, px, py):
    n = ci.shape[0]
    cnt = np.zeros((G + 1, H + 1), dtype=np.int64)
    LX = 1
    while (1 << LX) <= G:
        LX += 1
    LY = 1
    while (1 << LY) <= H:
        LY += 1
    st = np.empty((4, LX, LY, G, H), dtype=np.int32)
    st[:, 0, 0, :, :] = BIG
    for t in range(n):
        c = ci[t]
        r = rj[t]
        cnt[c + 1, r + 1] += 1
        st[0, 0, 0, c, r] = min(st[0, 0, 0, c, r], px[t])
        st[1, 0, 0, c, r] = min(st[1, 0, 0, c, r], -px[t])
        st[2, 0, 0, c, r] = min(st[2, 0, 0, c, r], py[t])
        st[3, 0, 0, c, r] = min(st[3, 0, 0, c, r], -py[t])
    for c in range(G + 1):
        for r in range(H + 1):
            if c > 0:
                cnt[c, r] += cnt[c - 1, r]
            if r > 0:
                cnt[c, r] += cnt[c, r - 1]
            if c > 0 and r > 0:
                cnt[c, r] -= cnt[c - 1, r - 1]
    for a in range(LX):
        for b in range(LY):
            if a == 0 and b == 0:
                continue
            for s in range(4):
                for c in range(G):
                    for r in range(H):
                        if a > 0:
                            c2 = c + (1 << (a - 1))
                            v = st[s, a - 1, b, c, r]
                            if c2 < G:
                                v = min(v, st[s, a - 1, b, c2, r])
                        else:
                            r2 = r + (1 << (b - 1))
                            v = st[s, a, b - 1, c, r]
                            if r2 < H:
                                v = min(v, st[s, a, b - 1, c, r2])
                        st[s, a, b, c, r] = v
    return cnt, st


@njit(cache=True)
def _lg(x):
    j = 0
    while (1 << (j + 1)) <= x:
        j += 1
    return j


@njit(cache=True)
def cell_block(GS, c0, c1, r0, r1, out):
    """Bounding box (rank space) of the points in cells [c0, c1] x [r0, r1]; True if empty."""
    if c0 < 0:
        c0 = 0
    if r0 < 0:
        r0 = 0
    if c1 > GS.G - 1:
        c1 = GS.G - 1
    if r1 > GS.H - 1:
        r1 = GS.H - 1
    if c0 > c1 or r0 > r1:
        return True
    cnt = GS.cnt
    if cnt[c1 + 1, r1 + 1] - cnt[c0, r1 + 1] - cnt[c1 + 1, r0] + cnt[c0, r0] == 0:
        return True
    a = _lg(c1 - c0 + 1)
    b = _lg(r1 - r0 + 1)
    ca = c1 - (1 << a) + 1
    rb = r1 - (1 << b) + 1
    st = GS.st
    for s in range(4):
        v = min(min(st[s, a, b, c0, r0], st[s, a, b, ca, r0]),
                min(st[s, a, b, c0, rb], st[s, a, b, ca, rb]))
        out[s] = v if s % 2 == 0 else -v
    return False


def _csr(keys, size, *cols):
    keys = np.asarray(keys, dtype=I64)
    order = np.argsort(keys, kind="stable")
    ptr = np.zeros(size + 1, dtype=I64)
    np.add.at(ptr, keys + 1, 1)
    ptr = np.cumsum(ptr)
    return (ptr,) + tuple(np.asarray(c, dtype=I64)[order] for c in cols)


def build_grid_struct(S, xl, xh, yl, yh, g: int, n_rects: Optional[int] = None) -> GridStruct:
    """Rank-space grid for extended rectangle sides (-1 / K mark infinite sides)."""
    K, L = S.K, S.L
    m = xl.shape[0]
    nr = m if n_rects is None else n_rects
    fx = np.concatenate([xl[xl >= 0], xh[xh < K]])
    fy = np.concatenate([yl[yl >= 0], yh[yh < L]])
    colstart = grid_boundaries(np.repeat(fx, 2), nr, g)
    rowstart = grid_boundaries(np.repeat(fy, 2), nr, g)
    colstart = colstart[colstart < max(K, 1)]
    rowstart = rowstart[rowstart < max(L, 1)]
    G = colstart.shape[0]
    H = rowstart.shape[0]
    colmap = (np.searchsorted(colstart, np.arange(K), side="right") - 1).astype(I64)
    rowmap = (np.searchsorted(rowstart, np.arange(L), side="right") - 1).astype(I64)
    colstart = np.append(colstart, K).astype(I64)
    rowstart = np.append(rowstart, L).astype(I64)
    cxl = np.where(xl < 0, -1, colmap[np.clip(xl, 0, max(K - 1, 0))] if K else -1).astype(I64)
    cxh = np.where(xh >= K, G, colmap[np.clip(xh, 0, max(K - 1, 0))] if K else G).astype(I64)
    ryl = np.where(yl < 0, -1, rowmap[np.clip(yl, 0, max(L - 1, 0))] if L else -1).astype(I64)
    ryh = np.where(yh >= L, H, rowmap[np.clip(yh, 0, max(L - 1, 0))] if L else H).astype(I64)
    ci = colmap[S.px] if S.n else np.zeros(0, I64)
    rj = rowmap[S.py] if S.n else np.zeros(0, I64)
    cnt, st = _cell_tables(G, H, ci, rj, S.px, S.py)
    # vertical edges: (column, rect, row span)
    ve = [(c, i, max(ryl[i], 0), min(ryh[i], H - 1)) for i in range(m) for c in {cxl[i], cxh[i]}
          if 0 <= c < G]
    he = [(r, i, max(cxl[i], 0), min(cxh[i], G - 1)) for i in range(m) for r in {ryl[i], ryh[i]}
          if 0 <= r < H]
    vptr, vrect, vlo, vhi = _csr([e[0] for e in ve], G, [e[1] for e in ve], [e[2] for e in ve],
                                 [e[3] for e in ve])
    hptr, hrect, hlo, hhi = _csr([e[0] for e in he], H, [e[1] for e in he], [e[2] for e in he],
                                 [e[3] for e in he])
    # each rect appears once per column in ve already (set over its two columns)
    c1ptr, c1rect = vptr, vrect
    r1ptr, r1rect = hptr, hrect
    oc = np.lexsort((S.py, ci)) if S.n else np.zeros(0, I64)
    orr = np.lexsort((S.px, rj)) if S.n else np.zeros(0, I64)
    cptr = np.zeros(G + 1, dtype=I64)
    np.add.at(cptr, ci + 1, 1)
    cptr = np.cumsum(cptr)
    rptr = np.zeros(H + 1, dtype=I64)
    np.add.at(rptr, rj + 1, 1)
    rptr = np.cumsum(rptr)
    c_px = np.ascontiguousarray(S.px[oc], dtype=I64)
    c_py = np.ascontiguousarray(S.py[oc], dtype=I64)
    r_px = np.ascontiguousarray(S.px[orr], dtype=I64)
    r_py = np.ascontiguousarray(S.py[orr], dtype=I64)
    c_mn, c_mx = _minmax_levels(c_px)
    r_mn, r_mx = _minmax_levels(r_py)
    return GridStruct(G, H, colstart, rowstart, colmap, rowmap, cxl, cxh, ryl, ryh, cnt, st,
                      vptr, vrect, vlo, vhi, hptr, hrect, hlo, hhi, c1ptr, c1rect, r1ptr, r1rect,
                      cptr, c_px, c_py, c_mn, c_mx, rptr, r_px, r_py, r_mn, r_mx)


@njit(cache=True)
def _lower(arr, a, b, v):
    while a < b:
        m = (a + b) >> 1
        if arr[m] < v:
            a = m + 1
        else:
            b = m
    return a


@njit(cache=True)
def gamma_pair(GS, n, vertical, line, span0, span1, lo, hi, olo, ohi, res):
    """Extreme cells along an edge holding a point outside the rectangle.

    The edge lies in column ``line`` (vertical) or row ``line`` and spans
    rows/columns [span0, span1].  The rectangle is [lo, hi] along the edge's
    direction and [olo, ohi] across it (rank space).  Writes the lowest and
    highest cell index along the edge into res (or -1).
    """
    res[0] = -1
    res[1] = -1
    if span0 > span1:
        return
    if vertical:
        ptr = GS.cptr
        along = GS.c_py
        other = GS.c_px
        mn = GS.c_mn
        mx = GS.c_mx
        starts = GS.rowstart
        cmap = GS.rowmap
    else:
        ptr = GS.rptr
        along = GS.r_px
        other = GS.r_py
        mn = GS.r_mn
        mx = GS.r_mx
        starts = GS.colstart
        cmap = GS.colmap
    a = ptr[line]
    b = ptr[line + 1]
    s = _lower(along, a, b, starts[span0])
    e = _lower(along, a, b, starts[span1 + 1]) - 1
    if s > e:
        return
    # along-coordinate below lo, inside [lo, hi], above hi
    m0 = _lower(along, s, e + 1, lo)
    m1 = _lower(along, s, e + 1, hi + 1) - 1
    if m0 > s:
        res[0] = cmap[along[s]]
    else:
        p = first_outside(mn, mx, n, m0, m1, olo, ohi)
        if p >= 0:
            res[0] = cmap[along[p]]
        elif m1 < e:
            res[0] = cmap[along[m1 + 1]]
    if m1 < e:
        res[1] = cmap[along[e]]
    else:
        p = last_outside(mn, mx, n, m0, m1, olo, ohi)
        if p >= 0:
            res[1] = cmap[along[p]]
        elif m0 > s:
            res[1] = cmap[along[m0 - 1]]


def gamma_cells(r1: ExtRect, edge: str, grid: Grid, pidx: PointIndex) -> tuple:
    """(gamma-, gamma+) cells along one bounded side of r1 holding a point of P outside r1.

    ``edge`` is one of "left", "right", "bottom", "top".  Cells are (column, row).
    """
    sx, sy = r1.sides
    side = {"left": sx.lo, "right": sx.hi, "bottom": sy.lo, "top": sy.hi}[edge]
    if not is_finite(side):
        raise ValueError("gamma cells need a bounded side")
    vertical = edge in ("left", "right")
    if vertical:
        line = grid.column_of(side)
        lo_i = 0 if not is_finite(sy.lo) else grid.row_of(sy.lo)
        hi_i = grid.nrows - 1 if not is_finite(sy.hi) else grid.row_of(sy.hi)
    else:
        line = grid.row_of(side)
        lo_i = 0 if not is_finite(sx.lo) else grid.column_of(sx.lo)
        hi_i = grid.ncols - 1 if not is_finite(sx.hi) else grid.column_of(sx.hi)
    S = pidx.struct
    if S.n == 0:
        return None, None
    # rank-space grid over the index's own coordinates
    xs, ys = pidx.xs, pidx.ys

    def to_ranks(bounds, vals):
        return np.array([0] + [bisect_left(vals, b) for b in bounds[1:-1]], dtype=I64)

    cs = to_ranks(grid.col_bounds, xs)
    rs = to_ranks(grid.row_bounds, ys)
    GS = _point_grid(S, cs, rs)
    res = np.full(2, -1, dtype=I64)

    def rk(vals, v, lo):
        if not is_finite(v):
            return -1 if v < 0 else len(vals)
        return bisect_left(vals, v) if lo else bisect_right(vals, v) - 1

    if vertical:
        gamma_pair(GS, S.n, True, line, lo_i, hi_i, rk(ys, sy.lo, True), rk(ys, sy.hi, False),
                   rk(xs, sx.lo, True), rk(xs, sx.hi, False), res)
        mk = lambda v: None if v < 0 else (line, int(v))
    else:
        gamma_pair(GS, S.n, False, line, lo_i, hi_i, rk(xs, sx.lo, True), rk(xs, sx.hi, False),
                   rk(ys, sy.lo, True), rk(ys, sy.hi, False), res)
        mk = lambda v: None if v < 0 else (int(v), line)
    return mk(res[0]), mk(res[1])


def _point_grid(S, cs: np.ndarray, rs: np.ndarray) -> GridStruct:
    # grid structure with explicit (possibly duplicated) rank starts; only point tables are used
    G, H = len(cs), len(rs)
    colmap = (np.searchsorted(cs, np.arange(S.K), side="right") - 1).astype(I64)
    rowmap = (np.searchsorted(rs, np.arange(S.L), side="right") - 1).astype(I64)
    ci = colmap[S.px]
    rj = rowmap[S.py]
    oc = np.lexsort((S.py, ci))
    orr = np.lexsort((S.px, rj))
    cptr = np.cumsum(np.concatenate([[0], np.bincount(ci, minlength=G)])).astype(I64)
    rptr = np.cumsum(np.concatenate([[0], np.bincount(rj, minlength=H)])).astype(I64)
    c_px = np.ascontiguousarray(S.px[oc], dtype=I64)
    c_py = np.ascontiguousarray(S.py[oc], dtype=I64)
    r_px = np.ascontiguousarray(S.px[orr], dtype=I64)
    r_py = np.ascontiguousarray(S.py[orr], dtype=I64)
    c_mn, c_mx = _minmax_levels(c_px)
    r_mn, r_mx = _minmax_levels(r_py)
    z = np.zeros(1, dtype=I64)
    z2 = np.zeros((1, 1), dtype=I64)
    st = np.zeros((4, 1, 1, 1, 1), dtype=np.int32)
    return GridStruct(G, H, np.append(cs, S.K).astype(I64), np.append(rs, S.L).astype(I64),
                      colmap, rowmap, z, z, z, z, z2, st, z, z, z, z, z, z, z, z, z, z, z, z,
                      cptr, c_px, c_py, c_mn, c_mx, rptr, r_px, r_py, r_mn, r_mx)


__all__ = ["Grid", "extend_rects", "build_grid", "occupancy", "maximal_filter",
           "count_maximal_grid_points", "gamma_cells", "GridStruct", "build_grid_struct",
           "cell_block", "gamma_pair", "first_outside", "last_outside", "grid_boundaries"]
