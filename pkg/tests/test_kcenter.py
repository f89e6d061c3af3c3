import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tricover.instances import make_rng, random_planar_points
from tricover.kcenter import (SortedMatrixUnion, candidate_diameters, d2c_matrix_decide,
                              euclid_dkc_brute, rect_d3c_decide, rect_d3c_optimize)
from tricover.oracles import brute_discrete_kcenter, brute_kcenter_decide

LINE = [(F(x), F(0)) for x in range(4)]


def _linf(p, q):
    return max(abs(a - b) for a, b in zip(p, q))


def _covers(P, Q, centers, r):
    return all(any(_linf(p, Q[c]) <= r for c in centers) for p in P)


def test_line_examples():
    got = rect_d3c_decide(LINE, 1)
    assert got is not None and _covers(LINE, LINE, got, 1)
    assert rect_d3c_decide(LINE, F(1, 2)) is None
    assert rect_d3c_optimize(LINE).radius == 1


def test_small_inputs():
    assert rect_d3c_optimize([(F(1), F(1))]).radius == 0
    assert rect_d3c_optimize([]).radius == 0
    P = [(F(0), F(0)), (F(5), F(5)), (F(9), F(1))]
    assert rect_d3c_optimize(P).radius == 0


def test_supply_set():
    P = [(F(0), F(0)), (F(10), F(0)), (F(20), F(0)), (F(30), F(0))]
    Q = [(F(5), F(0)), (F(20), F(0)), (F(30), F(0))]
    sol = rect_d3c_optimize(P, Q)
    assert sol.radius == brute_discrete_kcenter(P, 3, "linf", Q).radius == 5
    assert _covers(P, Q, sol.centers, 5)


def test_random_optimum_matches_brute():
    rng = make_rng(40)
    for t in range(60):
        P = random_planar_points(rng, int(rng.integers(1, 20)), C=int(rng.choice([5, 20, 100])))
        sol = rect_d3c_optimize(P)
        assert sol.radius == brute_discrete_kcenter(P, 3, "linf").radius, t
        assert _covers(P, P, sol.centers, sol.radius)
        assert rect_d3c_optimize(P, materialize=True).radius == sol.radius


def test_decider_monotone_ladder():
    rng = make_rng(41)
    for _ in range(20):
        P = random_planar_points(rng, int(rng.integers(4, 20)))
        ladder = [F(k, 2) for k in range(10)]
        answers = [rect_d3c_decide(P, r) is not None for r in ladder]
        assert answers == sorted(answers)
        assert answers == [brute_kcenter_decide(P, 3, r, "linf") is not None for r in ladder]


def test_candidates_and_selection():
    rng = make_rng(42)
    P = random_planar_points(rng, 15)
    Q = random_planar_points(rng, 9)
    cand = candidate_diameters(P, Q)
    assert cand == sorted({abs(p[d] - q[d]) for p in P for q in Q for d in (0, 1)})
    mats = [(sorted(int(v) for v in rng.integers(-50, 50, size=int(rng.integers(1, 30)))),
             sorted(int(v) for v in rng.integers(-50, 50, size=int(rng.integers(1, 30)))))
            for _ in range(4)]
    flat = sorted(x + y for a, c in mats for x in a for y in c)
    U = SortedMatrixUnion(mats)
    assert len(U) == len(flat)
    for k in range(0, len(flat), 7):
        assert U.select(k) == flat[k]
    with pytest.raises(IndexError):
        U.select(len(flat))


def _two_center_loop(P):
    best = None
    for i in range(len(P)):
        for j in range(len(P)):
            if i == j and len(P) > 1:
                continue
            rad = max(min(sum((a - b) ** 2 for a, b in zip(p, P[i])),
                          sum((a - b) ** 2 for a, b in zip(p, P[j]))) for p in P)
            best = rad if best is None or rad < best else best
    return best


def test_euclid_brute_matches_loop():
    rng = make_rng(43)
    for _ in range(40):
        P = random_planar_points(rng, int(rng.integers(2, 14)), C=10)
        assert euclid_dkc_brute(P, 2).radius == _two_center_loop(P)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)), min_size=3,
                max_size=12), st.integers(0, 60))
def test_matrix_decider_matches_brute(raw, r):
    P = [tuple(F(c) for c in p) for p in raw]
    best = euclid_dkc_brute(P, 2).radius
    assert d2c_matrix_decide(P, r) == (best <= r)


def test_matrix_decider_linf():
    rng = make_rng(44)
    for _ in range(30):
        P = random_planar_points(rng, int(rng.integers(3, 15)), C=10)
        for r in range(0, 8):
            want = brute_kcenter_decide(P, 2, F(r), "linf") is not None
            assert d2c_matrix_decide(P, r, "linf") == want
