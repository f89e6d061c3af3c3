import itertools
import math
from fractions import Fraction as F

import numpy as np
from hypothesis import given, settings, strategies as st

from tricover.geom_core import NEG_INF, POS_INF, ExtRect, bounding_box, point_in_rect
from tricover.grid import (build_grid, build_grid_struct, cell_block, count_maximal_grid_points,
                           extend_rects, gamma_cells, maximal_filter, occupancy)
from tricover.instances import make_rng, random_rects
from tricover.oracles import brute_cover_k
from tricover.range_index import build_point_index, build_point_struct


def _dominance_scan(S):
    S = set(S)
    return sum(1 for p in S if not any(all(a > b for a, b in zip(q, p)) for q in S))


def test_extend_examples():
    P = [(F(1), F(1)), (F(5), F(5))]
    B0 = bounding_box(P)
    big, small = ExtRect.closed((0, 0), (9, 9)), ExtRect.closed((2, 2), (3, 4))
    out = extend_rects([big, small], B0)
    assert out[0].lo == (NEG_INF, NEG_INF) and out[0].hi == (POS_INF, POS_INF)
    assert out[1] == small


def test_extend_keeps_covered_sets():
    rng = make_rng(4)
    for _ in range(50):
        P, R = random_rects(rng, int(rng.integers(3, 30)))
        for r, e in zip(R, extend_rects(R, bounding_box(P))):
            assert [point_in_rect(p, r) for p in P] == [point_in_rect(p, e) for p in P]


def test_single_cell_grid():
    R = [ExtRect.closed((k, k), (k + 3, k + 2), id=k) for k in range(5)]
    G = build_grid(R, 1)
    assert (G.ncols, G.nrows) == (1, 1)


def test_axis_distinct_occupancy():
    R = [ExtRect.closed((2 * k, 2 * k + 1), (2 * k + 20, 2 * k + 30), id=k) for k in range(8)]
    G = build_grid(R, 4)
    cols, rows = occupancy(G, R)
    assert cols <= 8 and rows <= 8


def test_occupancy_bound_random():
    rng = make_rng(8)
    for _ in range(100):
        P, R = random_rects(rng, int(rng.integers(3, 40)), C=int(rng.choice([5, 30, 200])))
        Rx = extend_rects(R, bounding_box(P))
        g = int(rng.integers(1, 10))
        G = build_grid(Rx, g)
        assert max(occupancy(G, Rx)) <= math.ceil(4 * len(Rx) / g)


def test_maximal_filter_examples():
    a, b = ExtRect.closed((1, 1), (2, 2), id=0), ExtRect.closed((0, 0), (3, 3), id=1)
    assert [r.id for r in maximal_filter([a, b])] == [1]
    disjoint = [ExtRect.closed((3 * k, 0), (3 * k + 1, 1), id=k) for k in range(4)]
    assert maximal_filter(disjoint) == disjoint


def test_maximal_filter_keeps_feasibility():
    rng = make_rng(9)
    for _ in range(60):
        P, R = random_rects(rng, int(rng.integers(3, 15)), weighted=False)
        kept = maximal_filter(R)
        assert all(not any(r is not s and r.sides != s.sides and
                           all(t.includes(u) for t, u in zip(r.sides, s.sides)) for r in R)
                   for s in kept)
        if len(kept) >= 3:
            want = brute_cover_k(P, R, 3, weighted=False) is not None
            assert (brute_cover_k(P, kept, 3, weighted=False) is not None) == want


def test_count_maximal_examples():
    for g in (1, 3, 7):
        full = list(itertools.product(range(1, g + 1), repeat=2))
        assert count_maximal_grid_points(full, g) == 2 * g - 1
    assert count_maximal_grid_points([(2, 3)], 5) == 1


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(1, 20), st.integers(1, 20)), max_size=80))
def test_count_maximal_random(S):
    c = count_maximal_grid_points(S, 20)
    assert c == _dominance_scan(S)
    assert c <= 2 * 20 - 1


def test_gamma_examples():
    P = [(F(1), F(1)), (F(2), F(2))]
    r1 = ExtRect.closed((0, 0), (3, 3))
    G = build_grid([r1, ExtRect.closed((5, 5), (6, 6))], 2)
    assert gamma_cells(r1, "right", G, build_point_index(P)) == (None, None)


def _gamma_scan(r1, edge, grid, P):
    sx, sy = r1.sides
    vertical = edge in ("left", "right")
    side = {"left": sx.lo, "right": sx.hi, "bottom": sy.lo, "top": sy.hi}[edge]
    line = grid.column_of(side) if vertical else grid.row_of(side)
    if vertical:
        lo = 0 if sy.lo == NEG_INF else grid.row_of(sy.lo)
        hi = grid.nrows - 1 if sy.hi == POS_INF else grid.row_of(sy.hi)
    else:
        lo = 0 if sx.lo == NEG_INF else grid.column_of(sx.lo)
        hi = grid.ncols - 1 if sx.hi == POS_INF else grid.column_of(sx.hi)
    hits = set()
    for p in P:
        if point_in_rect(p, r1):
            continue
        c, r = grid.cell_of(p)
        if (c if vertical else r) == line and lo <= (r if vertical else c) <= hi:
            hits.add((c, r))
    if not hits:
        return None, None
    key = (lambda t: t[1]) if vertical else (lambda t: t[0])
    return min(hits, key=key), max(hits, key=key)


def test_gamma_random_matches_scan():
    rng = make_rng(10)
    checked = 0
    for _ in range(150):
        P, R = random_rects(rng, int(rng.integers(3, 40)), C=12)
        G = build_grid(R, int(rng.integers(1, 6)))
        idx = build_point_index(P)
        for r in R:
            for edge in ("left", "right", "bottom", "top"):
                checked += 1
                assert gamma_cells(r, edge, G, idx) == _gamma_scan(r, edge, G, P)
    assert checked > 0


def test_single_uncovered_point_gamma():
    r1 = ExtRect.closed((0, 0), (4, 4))
    P = [(F(1), F(1)), (F(4), F(5))]
    G = build_grid([r1, ExtRect.closed((3, 5), (8, 8))], 1)
    got = gamma_cells(r1, "right", G, build_point_index(P))
    assert got[0] == got[1] == G.cell_of(P[1])


def test_cell_block_matches_scan():
    rng = make_rng(12)
    for _ in range(40):
        n, m = int(rng.integers(1, 60)), int(rng.integers(1, 20))
        K = L = 30
        px, py = rng.integers(0, K, size=n), rng.integers(0, L, size=n)
        S = build_point_struct(px, py, K, L)
        xl = np.sort(rng.integers(-1, K + 1, size=(m, 2)), axis=1)
        yl = np.sort(rng.integers(-1, L + 1, size=(m, 2)), axis=1)
        GS = build_grid_struct(S, xl[:, 0].copy(), xl[:, 1].copy(), yl[:, 0].copy(), yl[:, 1].copy(),
                               int(rng.integers(1, 8)))
        out = np.zeros(4, dtype=np.int64)
        for _ in range(20):
            c0, c1 = sorted(int(v) for v in rng.integers(0, GS.G, size=2))
            r0, r1 = sorted(int(v) for v in rng.integers(0, GS.H, size=2))
            inside = [(x, y) for x, y in zip(px, py)
                      if c0 <= GS.colmap[x] <= c1 and r0 <= GS.rowmap[y] <= r1]
            empty = cell_block(GS, c0, c1, r0, r1, out)
            assert empty == (not inside)
            if inside:
                xs, ys = [p[0] for p in inside], [p[1] for p in inside]
                assert list(out) == [min(xs), max(xs), min(ys), max(ys)]
