import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tricover.geom_core import point_in_rect
from tricover.graphs import PartiteHypergraph3, WeightedGraph
from tricover.instances import all_triples, random_hypergraph
from tricover.oracles import brute_discrete_kcenter, graph_has_triangle
from tricover.reductions import (KINDS, MU, NU, DegenerateSourceError, QSqrt39, embed_unit_circle,
                                 gen_4clique_cover6_r2, gen_d3c_r4, gen_hyperclique_d2c_r13,
                                 gen_hyperclique_dkc, gen_maxcov2_r12, gen_triangle_boxes_r3,
                                 gen_triangle_orthants_r4, gen_weighted_triangle_r2, generate,
                                 maxcov_point_count, verify_reduction)

K3 = WeightedGraph((0, F(1, 20), F(1, 10)), ((0, 1), (1, 2), (0, 2)))
P3 = WeightedGraph((0, F(1, 20), F(1, 10)), ((0, 1), (1, 2)))
PATH4 = WeightedGraph((0, F(1, 30), F(1, 15), F(1, 10)), ((0, 1), (1, 2), (2, 3)))


def _sq(p, q):
    return sum(((a - b) * (a - b) for a, b in zip(p, q)), QSqrt39(0))


def _complete(parts, missing=()):
    labels = tuple((F(1, 2),) for _ in range(parts))
    return PartiteHypergraph3(labels, tuple(t for t in all_triples([1] * parts) if t not in missing))


# --------------------------------------------------------------------------
# exact numbers

def test_qsqrt39_arithmetic():
    r = QSqrt39(0, 1)
    assert r * r == 39
    assert QSqrt39(6, 1) > 12 > QSqrt39(6, -1)
    assert QSqrt39(F(1, 2), 0) == F(1, 2)
    assert str(QSqrt39(F(5, 4), F(-1, 4))) == "5/4+-1/4*sqrt39"
    assert hash(QSqrt39(3, 0)) == hash(QSqrt39(3, 0))


def test_mu_nu_equations():
    assert MU * MU + (NU - 2) * (NU - 2) == 8
    assert (MU - 2) * (MU - 2) + NU * NU == 6


@settings(max_examples=50)
@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=50), min_size=2,
                max_size=10, unique=True))
def test_embedding_on_circle(xs):
    imgs = [embed_unit_circle(x) for x in xs]
    assert all(f * f + g * g == 1 for f, g in imgs)
    assert len(set(imgs)) == len(imgs)


# --------------------------------------------------------------------------
# graph constructions

def test_weighted_triangle_example():
    G = WeightedGraph(K3.labels, ((0, 1, F(1, 100)), (1, 2, F(2, 100)), (0, 2, F(3, 100))))
    rep = verify_reduction("weighted_triangle_r2", G, gen_weighted_triangle_r2(G))
    assert rep.agree and rep.geometry_value == 9 + F(6, 100)


def test_weighted_triangle_free():
    G = WeightedGraph(P3.labels, ((0, 1, F(1, 100)), (1, 2, F(2, 100))))
    inst = gen_weighted_triangle_r2(G)
    rep = verify_reduction("weighted_triangle_r2", G, inst)
    assert rep.agree and not rep.geometry_answer
    assert rep.geometry_value is None or rep.geometry_value >= 3 * G.n + 1


@pytest.mark.parametrize("gen,kind", [(gen_triangle_boxes_r3, "triangle_boxes_r3"),
                                      (gen_triangle_orthants_r4, "triangle_orthants_r4")])
def test_unweighted_triangle_families(gen, kind):
    assert verify_reduction(kind, K3, gen(K3)).geometry_answer
    assert not verify_reduction(kind, P3, gen(P3)).geometry_answer


def test_d3c_examples():
    assert verify_reduction("d3c_r4", K3, gen_d3c_r4(K3)).geometry_answer
    rep = verify_reduction("d3c_r4", PATH4, gen_d3c_r4(PATH4))
    assert rep.agree and not rep.geometry_answer


def test_d3c_auxiliary_points_matter():
    full, bare = gen_d3c_r4(PATH4), gen_d3c_r4(PATH4, with_aux=False)
    with_aux = brute_discrete_kcenter(list(full.points), 3, "linf")
    without = brute_discrete_kcenter(list(bare.points), 3, "linf")
    assert with_aux.radius > 5 >= without.radius
    assert {full.points[c] for c in with_aux.centers} != {bare.points[c] for c in without.centers}
    lo, hi = gen_d3c_r4(K3).meta["center_range"]
    sol = brute_discrete_kcenter(list(gen_d3c_r4(K3).points), 3, "linf")
    assert sol.radius <= 5 and all(lo <= c < hi for c in sol.centers)


def test_cover6_examples():
    labels = tuple(F(k + 1, 40) for k in range(4))
    ws = [F(k, 100) for k in (1, 2, 3, 4, 5, 6)]
    K4 = WeightedGraph(labels, tuple((a, b, w) for (a, b), w in zip(itertools.combinations(range(4), 2), ws)))
    rep = verify_reduction("cover6_r2", K4, gen_4clique_cover6_r2(K4))
    assert rep.agree and rep.geometry_value == 8 * 4 + sum(ws)
    C4 = WeightedGraph(labels, ((0, 1, ws[0]), (1, 2, ws[1]), (2, 3, ws[2]), (0, 3, ws[3]), (0, 2, ws[4])))
    rep = verify_reduction("cover6_r2", C4, gen_4clique_cover6_r2(C4))
    assert rep.agree and not rep.geometry_answer
    assert rep.geometry_value is None or rep.geometry_value >= 8 * 4 + 1


def test_label_rules():
    with pytest.raises(ValueError):
        gen_4clique_cover6_r2(K3)  # label 0 is not allowed here
    with pytest.raises(ValueError):
        gen_triangle_boxes_r3(WeightedGraph((F(1, 20), F(1, 10)), ((0, 1),)))


# --------------------------------------------------------------------------
# hypergraph constructions

def test_d2c_distances():
    H = random_hypergraph(3, per_part=2, density=0.8)
    inst = gen_hyperclique_d2c_r13(H)
    tags = inst.meta["tags"]
    s_plus = next(p for p, t in zip(inst.points, tags) if t[0] == "s+")
    for p, t in zip(inst.points, tags):
        if t[0] == "p":
            assert _sq(s_plus, p) == F(37, 4)
        elif t[0] == "q":
            assert _sq(s_plus, p) == F(93, 4)


def test_d2c_answers():
    assert verify_reduction("d2c_r13", _complete(6), gen_hyperclique_d2c_r13(_complete(6))).geometry_answer
    broken = _complete(6, missing=[((0, 0), (1, 0), (3, 0))])
    rep = verify_reduction("d2c_r13", broken, gen_hyperclique_d2c_r13(broken))
    assert rep.agree and not rep.geometry_answer


def test_degenerate_sources():
    empty_half = _complete(6, missing=[((0, 0), (1, 0), (2, 0))])
    with pytest.raises(DegenerateSourceError):
        gen_hyperclique_d2c_r13(empty_half)
    with pytest.raises(DegenerateSourceError):
        gen_hyperclique_dkc(empty_half, 2)


def test_dkc_case4_distance():
    z_tri = ((0, 0), (3, 0), (6, 0))
    H = _complete(12, missing=[z_tri])
    inst = gen_hyperclique_dkc(H, 4)
    tags = inst.meta["tags"]
    z = next(p for p, t in zip(inst.points, tags) if t == ("z", z_tri))
    far = [p for p, t in zip(inst.points, tags) if t[0] == "p3"]
    assert far and all(_sq(z, p) == 22 for p in far)


def test_dkc_uses_extension_ring():
    H = _complete(6, missing=[((0, 0), (1, 0), (3, 0))])
    inst = gen_hyperclique_dkc(H, 2)
    assert any(isinstance(c, QSqrt39) for p in inst.points for c in p)
    rep = verify_reduction("dkc", H, inst)
    assert rep.agree and not rep.geometry_answer


def _triple_count(inst, key, pair):
    return sum(1 for p, t in zip(inst.points, inst.meta["tags"])
               if t[0] == key and any(point_in_rect(p, r) for r in pair))


def _orthants(inst, tri_a, tri_b):
    tags = inst.meta["range_tags"]
    return [inst.ranges[tags.index(tri_a)], inst.ranges[tags.index(tri_b)]]


def test_maxcov_per_triple_counts():
    for n in (1, 2):
        labels = tuple(tuple(F(k, n + 1) for k in range(n)) for _ in range(6))
        full = PartiteHypergraph3(labels, tuple(all_triples([n] * 6)))
        inst = gen_maxcov2_r12(full)
        a, b = ((0, 0), (1, 0), (2, 0)), ((3, 0), (4, 0), (5, 0))
        assert _triple_count(inst, (0, 1, 3), _orthants(inst, a, b)) == n * n + n
        hole = (0, 0), (1, 0), (3, 0)
        H = PartiteHypergraph3(labels, tuple(t for t in all_triples([n] * 6) if t != hole))
        inst = gen_maxcov2_r12(H)
        assert _triple_count(inst, (0, 1, 3), _orthants(inst, a, b)) == n * n + n - 1


def test_maxcov_point_count_closed_form():
    for seed in range(10):
        H = random_hypergraph(seed, per_part=2)
        for anchors in (True, False):
            assert len(gen_maxcov2_r12(H, anchors).points) == maxcov_point_count(H, anchors)


def test_maxcov_needs_anchors():
    H = random_hypergraph(1, per_part=2)
    bare = verify_reduction("maxcov2_r12", H, gen_maxcov2_r12(H, anchors=False))
    assert not bare.agree and bare.geometry_answer and not bare.source_answer
    assert verify_reduction("maxcov2_r12", H, gen_maxcov2_r12(H)).agree


@pytest.mark.parametrize("kind", KINDS)
def test_each_kind_agrees(kind):
    if kind in ("d2c_r13", "dkc", "maxcov2_r12"):
        src = _complete(6)
    elif kind == "cover6_r2":
        src = WeightedGraph(tuple(F(k + 1, 40) for k in range(4)),
                            tuple((a, b, F(a + b, 100)) for a, b in itertools.combinations(range(4), 2)))
    elif kind == "weighted_triangle_r2":
        src = WeightedGraph(K3.labels, tuple((u, v, F(1, 100)) for u, v, _ in K3.edges))
    else:
        src = K3
    rep = verify_reduction(kind, src, generate(kind, src))
    assert rep.agree and rep.source_answer
