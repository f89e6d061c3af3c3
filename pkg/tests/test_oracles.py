import itertools
from fractions import Fraction as F

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from tricover.geom_core import ExtRect, point_in_rect
from tricover.graphs import PartiteHypergraph3, WeightedGraph
from tricover.instances import make_rng, random_graph, random_hypergraph, random_planar_points, random_rects
from tricover.kcenter import euclid_dkc_brute
from tricover.oracles import (BudgetExceeded, OracleBudget, branch_cover_k, brute_cover_k,
                              brute_discrete_kcenter, brute_maxcov, graph_has_triangle,
                              graph_min_4clique, graph_min_triangle, hyperclique)

from conftest import pts2, rects2, scan_cover3


@settings(max_examples=100, deadline=None)
@given(st.lists(pts2, max_size=10), rects2(max_size=7))
def test_cover3_matches_scan(P, R):
    got = brute_cover_k(P, R, 3)
    want = scan_cover3(P, R)
    assert (None if got is None else got[1]) == want


def test_cover_lexicographic_first():
    P = [(F(0), F(0))]
    R = [ExtRect.closed((0, 0), (1, 1), weight=1, id=k) for k in range(5)]
    assert brute_cover_k(P, R, 3) == ((0, 1, 2), 3)


def test_branch_matches_brute():
    rng = make_rng(50)
    for t in range(150):
        P, R = random_rects(rng, int(rng.integers(3, 12)), C=6)
        k = int(rng.integers(1, 5))
        a, b = branch_cover_k(P, R, k), brute_cover_k(P, R, k)
        assert (a is None) == (b is None), t
        if a is not None:
            assert a[1] == b[1]
            chosen = [r for r in R if r.id in a[0]]
            assert len(a[0]) == k and all(any(point_in_rect(p, r) for r in chosen) for p in P)


def test_budget_limits():
    P, R = random_rects(1, 40, C=30)
    R = R + [ExtRect(r.sides, r.weight, 100 + r.id) for r in R]
    with pytest.raises(BudgetExceeded):
        brute_cover_k(P, R, 6, budget=OracleBudget(max_subsets=10))
    with pytest.raises(BudgetExceeded):
        brute_discrete_kcenter(P, 3, budget=OracleBudget(max_points=5))


def test_kcenter_collinear():
    P = [(F(x), F(0)) for x in range(4)]
    assert brute_discrete_kcenter(P, 3, "linf").radius == 1


def test_kcenter_matches_euclid_brute():
    rng = make_rng(51)
    for _ in range(40):
        P = random_planar_points(rng, int(rng.integers(2, 12)), C=12)
        k = int(rng.integers(1, min(4, len(P)) + 1))
        assert brute_discrete_kcenter(P, k, "l2").radius == euclid_dkc_brute(P, k).radius


def test_maxcov_matches_scan():
    rng = make_rng(52)
    for _ in range(60):
        P, R = random_rects(rng, int(rng.integers(2, 25)))
        (a, b), c = brute_maxcov(P, R)
        ra, rb = (next(r for r in R if r.id == i) for i in (a, b))
        assert c == sum(point_in_rect(p, ra) or point_in_rect(p, rb) for p in P)
        assert c == max(sum(point_in_rect(p, x) or point_in_rect(p, y) for p in P)
                        for x, y in itertools.combinations(R, 2))


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for u, v, w in G.edges:
        H.add_edge(u, v, w=w or 0)
    return H


def _min_clique_weight(G, size):
    H = _nx(G)
    best = None
    for c in nx.enumerate_all_cliques(H):
        if len(c) == size:
            w = sum(H[a][b]["w"] for a, b in itertools.combinations(c, 2))
            best = w if best is None or w < best else best
    return best


def test_min_triangle_and_clique_order_independent():
    rng = make_rng(53)
    for _ in range(60):
        G = random_graph(rng, 8, 0.5, weighted=True)
        tri = graph_min_triangle(G)
        assert (None if tri is None else tri[1]) == _min_clique_weight(G, 3)
        assert graph_has_triangle(G) == (tri is not None)
        q = graph_min_4clique(G)
        assert (None if q is None else q[1]) == _min_clique_weight(G, 4)


def test_unweighted_triangle_examples():
    k3 = WeightedGraph((0, F(1, 20), F(1, 10)), ((0, 1), (1, 2), (0, 2)))
    path = WeightedGraph((0, F(1, 20), F(1, 10)), ((0, 1), (1, 2)))
    assert graph_has_triangle(k3) and not graph_has_triangle(path)


def _hyper_scan(H):
    E = H.edge_set()
    for choice in itertools.product(*(range(len(p)) for p in H.parts)):
        vs = list(enumerate(choice))
        if all(tuple(sorted(t)) in E for t in itertools.combinations(vs, 3)):
            return True
    return False


def test_hyperclique_matches_scan():
    rng = make_rng(54)
    for _ in range(80):
        H = random_hypergraph(rng, parts=int(rng.choice([3, 4, 6])), per_part=2,
                              density=float(rng.choice([0.3, 0.7, 0.9])))
        assert hyperclique(H) == _hyper_scan(H)


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        PartiteHypergraph3(((0,), (1,), (2,)), ((((0, 0), (0, 0), (1, 0))),))
