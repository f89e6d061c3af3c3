from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tricover.cover3 import (CellAssignment, GuessConfig, InvalidConfigError, NotUnitSquareError,
                             Provenance, Variant, WeightedInputError, classify_cells, pick_variant,
                             solve, solve_basic, solve_unit_squares_unweighted,
                             solve_unit_squares_weighted, solve_unweighted, solve_weighted_rect)
from tricover.geom_core import ExtRect, Interval, covers_all, point_in_rect
from tricover.instances import make_rng, planted_instance
from tricover.oracles import brute_cover_k

from conftest import pts2, rects2, scan_cover3

WEIGHTED = (solve_basic, solve_weighted_rect)


def _check(sol, P, R, want):
    if want is None:
        assert sol is None
        return
    assert sol is not None and sol.weight == want
    chosen = [r for r in R if r.id in sol.ids]
    assert len(set(sol.ids)) == 3 and covers_all(chosen, P)


def test_one_cheap_rect_plus_completers():
    P = [(F(1), F(1)), (F(2), F(3))]
    R = [ExtRect.closed((0, 0), (5, 5), weight=1, id=0),
         ExtRect.closed((10, 10), (11, 11), weight=100, id=1),
         ExtRect.closed((20, 20), (21, 21), weight=100, id=2)]
    assert scan_cover3(P, R) == 201
    for f in WEIGHTED:
        _check(f(P, R), P, R, 201)


def test_cheapest_completers_join():
    P = [(F(1), F(1))]
    R = [ExtRect.closed((0, 0), (5, 5), weight=3, id=0)] + [
        ExtRect.closed((9, 9), (10, 10), weight=w, id=k + 1) for k, w in enumerate((7, 2, 5, 2))]
    for f in WEIGHTED:
        sol = f(P, R)
        assert sol.weight == 7 and sol.ids == (0, 2, 4)


def test_three_clusters():
    P = [(F(x), F(y)) for cx in (0, 10, 20) for x, y in ((cx, 0), (cx + 1, 1))]
    R = [ExtRect.closed((cx, 0), (cx + 1, 1), weight=5, id=k) for k, cx in enumerate((0, 10, 20))]
    R.append(ExtRect.closed((0, 0), (11, 1), weight=20, id=3))
    for f in WEIGHTED:
        sol = f(P, R)
        assert sol.weight == 15
        assert sol.provenance in (Provenance.STEP1, Provenance.STEP2, Provenance.STEP3, Provenance.CASE_I)
    assert solve_unweighted(P, [ExtRect(r.sides, None, r.id) for r in R]) is not None


def test_nested_rects_filtered():
    P = [(F(0), F(0)), (F(5), F(5)), (F(9), F(9))]
    R = [ExtRect.closed((-k, -k), (k, k), id=k) for k in range(1, 6)]
    R += [ExtRect.closed((9, 9), (9, 9), id=6), ExtRect.closed((4, 4), (6, 6), id=7)]
    assert (solve_unweighted(P, R) is not None) == (brute_cover_k(P, R, 3, weighted=False) is not None)


def test_unit_tiling_and_single_square():
    squares = [ExtRect.closed((2 * k, 0), (2 * k + 1, 1), weight=k + 1, id=k) for k in range(4)]
    P = [(F(2 * k) + F(1, 2), F(1, 2)) for k in range(3)]
    assert solve_unit_squares_weighted(P, squares).weight == 6
    assert solve_unit_squares_unweighted(P, [ExtRect(r.sides, None, r.id) for r in squares]) is not None
    P1 = [(F(6), F(0)), (F(13, 2), F(1))]
    assert solve_unit_squares_weighted(P1, squares).weight == 4 + 1 + 2


def test_input_errors():
    P = [(F(0), F(0))]
    big = [ExtRect.closed((0, 0), (2, 1), id=k) for k in range(3)]
    with pytest.raises(NotUnitSquareError):
        solve_unit_squares_unweighted(P, big)
    weighted = [ExtRect.closed((0, 0), (1, 1), weight=k + 2, id=k) for k in range(3)]
    with pytest.raises(WeightedInputError):
        solve_unweighted(P, weighted)
    assert solve_basic(P, weighted[:2]) is None


def test_pick_variant():
    unit = [ExtRect.closed((0, 0), (1, 1), id=0)]
    assert pick_variant(unit) is Variant.UNIT_UNW
    assert pick_variant([ExtRect.closed((0, 0), (1, 1), weight=3, id=0)]) is Variant.UNIT_W
    assert pick_variant([ExtRect.closed((0, 0), (2, 1), id=0)]) is Variant.UNWEIGHTED
    assert pick_variant([ExtRect.closed((0, 0), (2, 1), weight=2, id=0)]) is Variant.WEIGHTED_RECT


def test_report_counters():
    P, R = planted_instance(3, unit=False, weighted=True, n=20)
    rep = {}
    solve(P, R, "basic", report=rep)
    assert rep["variant"] == "basic" and rep["g"] >= 1


@settings(max_examples=150, deadline=None)
@given(st.lists(pts2, max_size=12), rects2(max_size=8), st.sampled_from([None, 1, 2, 3, 5]))
def test_weighted_variants_match_scan(P, R, g):
    want = scan_cover3(P, R)
    for f in WEIGHTED:
        _check(f(P, R, g=g), P, R, want)


@settings(max_examples=150, deadline=None)
@given(st.lists(pts2, max_size=12), rects2(weighted=False, max_size=8))
def test_unweighted_feasibility_matches_scan(P, R):
    want = scan_cover3(P, R, weighted=False)
    sol = solve_unweighted(P, R)
    assert (sol is None) == (want is None)
    if sol is not None:
        assert covers_all([r for r in R if r.id in sol.ids], P)


@pytest.mark.parametrize("weighted", [True, False])
def test_planted_unit_instances(weighted):
    rng = make_rng(21)
    for _ in range(60):
        P, R = planted_instance(rng, unit=True, weighted=weighted)
        want = scan_cover3(P, R, weighted)
        f = solve_unit_squares_weighted if weighted else solve_unit_squares_unweighted
        sol = f(P, R, g=int(rng.integers(1, 6)))
        assert (sol is None) == (want is None)
        if weighted and sol is not None:
            assert sol.weight == want


# --------------------------------------------------------------------------
# cell classification

def test_config_validation():
    with pytest.raises(InvalidConfigError):
        GuessConfig(((0, 1, 0, 1),) * 2, 4, 4)
    with pytest.raises(InvalidConfigError):
        GuessConfig(((0, 1, 0, 1), (0, 2, 2, 3), (3, 3, 3, 3)), 4, 4)


def _realize(cfg, rng):
    """Coordinates consistent with the guess: column i is [i, i+1), a side in column c sits at c + u."""
    rects = []
    for r in cfg.rects:
        vals = []
        for v in r:
            vals.append(None if v is None else F(int(v)) + F(int(rng.integers(1, 8)), 8))
        xl, xh, yl, yh = vals
        inf = float("inf")
        rects.append(ExtRect((Interval(-inf if xl is None else xl, inf if xh is None else xh),
                              Interval(-inf if yl is None else yl, inf if yh is None else yh))))
    return rects


def _random_config(rng, G, H):
    while True:
        cols = [int(c) for c in rng.permutation(G)[:6]]
        rows = [int(c) for c in rng.permutation(H)[:6]]
        rs = []
        for s in range(3):
            xl, xh = sorted(cols[2 * s: 2 * s + 2])
            yl, yh = sorted(rows[2 * s: 2 * s + 2])
            side = [xl, xh, yl, yh]
            for d in range(4):
                if rng.random() < 0.15:
                    side[d] = None
            rs.append(tuple(side))
        try:
            return GuessConfig(tuple(rs), G, H)
        except InvalidConfigError:
            continue


def test_cell_types_under_realizations():
    rng = make_rng(30)
    for _ in range(80):
        cfg = _random_config(rng, 8, 8)
        cells = classify_cells(cfg)
        assert isinstance(cells, CellAssignment)
        assert len(cells.of_type("C")) <= 24
        for _ in range(5):
            rects = _realize(cfg, rng)
            for (i, j), (t, owners) in cells.cells.items():
                for _ in range(6):
                    p = (F(i) + F(int(rng.integers(0, 16)), 16), F(j) + F(int(rng.integers(0, 16)), 16))
                    hit = [s + 1 for s in range(3) if point_in_rect(p, rects[s])]
                    if t == "A":
                        assert owners and all(point_in_rect(p, rects[s - 1]) for s in owners)
                    elif t == "B" and hit:
                        assert hit == sorted(owners)


def test_cells_outside_everything_unclassified():
    cfg = GuessConfig(((1, 2, 1, 2), (4, 5, 4, 5), (6, 7, 0, 3)), 8, 8)
    cells = classify_cells(cfg)
    assert (0, 7) not in cells.cells
    assert cells.cells[(1, 1)] == ("B", frozenset({1}))
