from fractions import Fraction as F

from tricover.geom_core import NEG_INF, POS_INF, BBox, ExtRect, Interval, point_in_rect
from tricover.instances import make_rng, random_rects
from tricover.pair_oracle import best_third, build_pair_oracle, complement_decomposition

B0 = BBox(F(0), F(10), F(0), F(10))


def _membership_ok(r1, r2, pieces, rng, samples=10_000):
    for _ in range(samples):
        p = (F(int(rng.integers(-4, 44)), 4), F(int(rng.integers(-4, 44)), 4))
        in_box = 0 <= p[0] <= 10 and 0 <= p[1] <= 10
        want = in_box and not (point_in_rect(p, r1) or point_in_rect(p, r2))
        hits = sum(point_in_rect(p, c) for c in pieces)
        assert hits == (1 if want else 0), p


def test_containing_rect_leaves_nothing():
    big = ExtRect.closed((-1, -1), (11, 11))
    assert complement_decomposition(big, big, B0) == []


def test_disjoint_quadrants():
    q1 = ExtRect((Interval(NEG_INF, 3), Interval(NEG_INF, 4)))
    q2 = ExtRect((Interval(6, POS_INF), Interval(7, POS_INF)))
    pieces = complement_decomposition(q1, q2, B0)
    _membership_ok(q1, q2, pieces, make_rng(0))


def test_same_rect_twice():
    r = ExtRect.closed((2, 3), (5, 6))
    pieces = complement_decomposition(r, r, B0)
    assert len(pieces) <= 8
    _membership_ok(r, r, pieces, make_rng(1), samples=3000)


def test_random_pairs_membership():
    rng = make_rng(2)
    for _ in range(20):
        rs = []
        for _ in range(2):
            a, b = sorted(int(v) for v in rng.integers(-2, 13, size=2))
            c, d = sorted(int(v) for v in rng.integers(-2, 13, size=2))
            rs.append(ExtRect.closed((a, c), (b, d)))
        _membership_ok(*rs, complement_decomposition(*rs, B0), rng, samples=1000)


def _scan_third(P, R, r1, r2):
    best = None
    for r in R:
        if r.id in (r1.id, r2.id):
            continue
        if all(point_in_rect(p, r1) or point_in_rect(p, r2) or point_in_rect(p, r) for p in P):
            key = (r.weight, r.id)
            best = key if best is None or key < best else best
    return None if best is None else (best[1], best[0])


def test_remainder_conventions():
    P = [(F(1), F(1)), (F(8), F(8))]
    R = [ExtRect.closed((0, 0), (2, 2), weight=4, id=0),
         ExtRect.closed((0, 0), (9, 9), weight=9, id=1),
         ExtRect.closed((7, 7), (9, 9), weight=3, id=2),
         ExtRect.closed((5, 5), (9, 9), weight=2, id=3),
         ExtRect.closed((20, 20), (21, 21), weight=1, id=4)]
    po = build_pair_oracle(P, R)
    # P inside r1: lightest other rectangle overall
    assert best_third(po, R[1], R[0]) == (4, 1)
    # remainder is the single point (8, 8)
    assert best_third(po, R[0], R[4]) == (3, 2)


def test_random_best_third():
    rng = make_rng(3)
    for t in range(300):
        P, R = random_rects(rng, int(rng.integers(5, 25)))
        if len(R) < 3:
            continue
        i, j = (int(v) for v in rng.choice(len(R), size=2, replace=False))
        po = build_pair_oracle(P, R)
        assert best_third(po, R[i], R[j]) == _scan_third(P, R, R[i], R[j]), t
