from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from tricover.geom_core import (NEG_INF, POS_INF, REAL_LINE, DimensionError, ExtRect, Interval,
                                bounding_box, check_dims, covers_all, ext, point, point_in_rect,
                                rational, rect_encloses, total_weight)

from conftest import pts2, rects2


def test_rational_parsing():
    assert rational("1/3") == F(1, 3)
    assert rational("0.25") == F(1, 4)
    assert rational(7) == 7
    with pytest.raises((ValueError, TypeError)):
        rational(float("inf"))
    assert ext("-inf") == NEG_INF and ext("inf") == POS_INF


def test_infinite_endpoints_are_open():
    s = Interval(NEG_INF, 3)
    assert not s.lo_closed and s.hi_closed and s.closed
    with pytest.raises(ValueError):
        Interval(2, 1)
    with pytest.raises(ValueError):
        Interval(1, 1, True, False)


def test_open_orthant_membership():
    r = ExtRect((Interval(NEG_INF, 1, hi_closed=False), Interval(NEG_INF, 1)))
    assert point_in_rect(point(0, 1), r)
    r2 = ExtRect((Interval(NEG_INF, F(11, 10), hi_closed=False), Interval(NEG_INF, 1)))
    assert not point_in_rect(point(2, F(1, 10)), r2)
    assert point_in_rect(point(5, 5), ExtRect((REAL_LINE, REAL_LINE)))


def test_covers_all_trivial():
    assert covers_all([ExtRect.closed((0, 0), (1, 1))], [])
    assert not covers_all([], [point(0, 0)])


def test_encloses_boundary():
    assert rect_encloses(ExtRect.closed((0, 0), (10, 10)), ExtRect.closed((1, 3), (2, 4)))
    half_open = ExtRect((Interval(0, 1, True, False), Interval(0, 1)))
    assert not rect_encloses(half_open, ExtRect.closed((0, 0), (1, 1)))


def test_dims_and_weights():
    with pytest.raises(DimensionError):
        check_dims([point(0, 0, 0)], [ExtRect.closed((0, 0), (1, 1))])
    assert check_dims([point(0, 0)], [ExtRect.closed((0, 0), (1, 1))]) == 2
    rs = [ExtRect.closed((0, 0), (1, 1), weight=F(1, 2)), ExtRect.closed((0, 0), (1, 1), weight=2)]
    assert total_weight(rs) == F(5, 2)
    assert bounding_box([]) is None


@given(st.lists(pts2, max_size=20), rects2(max_size=3))
def test_covers_all_matches_loop(P, R):
    want = all(any(point_in_rect(p, r) for r in R) for p in P)
    assert covers_all(R, P) == want


@given(rects2(max_size=2))
def test_encloses_matches_corners(R):
    if len(R) < 2:
        return
    a, b = R
    corners = [(x, y) for x in (b.lo[0], b.hi[0]) for y in (b.lo[1], b.hi[1])]
    assert rect_encloses(a, b) == all(point_in_rect(c, a) for c in corners)
