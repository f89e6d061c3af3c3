"""Lower-bound constructions as exact instance generators, plus double-oracle verifiers.

Each generator turns a graph or partite hypergraph into a geometric instance
whose answer is tied to a clique question on the source.  ``verify_reduction``
answers both sides by brute force and reports whether they agree.

Vertex labels must already lie in the required range; nothing is rescaled.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .geom_core import NEG_INF, POS_INF, REAL_LINE, ExtRect, Interval, rational
from .graphs import PartiteHypergraph3, WeightedGraph
from .oracles import (DEFAULT_BUDGET, OracleBudget, branch_cover_k, brute_cover_k, brute_kcenter_decide,
                      brute_maxcov, graph_has_triangle, graph_min_4clique, graph_min_triangle,
                      hyperclique)
from .geom_core import point_in_rect

F = Fraction
TENTH = F(1, 10)
SENTINEL = F(100)

KINDS = ("weighted_triangle_r2", "triangle_boxes_r3", "triangle_orthants_r4", "d3c_r4",
         "cover6_r2", "d2c_r13", "dkc", "maxcov2_r12")


# --------------------------------------------------------------------------
# exact numbers a + b*sqrt(39)

class QSqrt39:
    """Element a + b*sqrt(39) of Q(sqrt 39) with exact ordering."""
    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = F(a)
        self.b = F(b)

    @staticmethod
    def _lift(x):
        return x if isinstance(x, QSqrt39) else QSqrt39(x, 0)

    def __add__(self, o):
        o = self._lift(o)
        return QSqrt39(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt39(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        return QSqrt39(self.a * o.a + 39 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def sign(self) -> int:
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return int(a > 0 or b > 0)
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 39 b^2
        d = a * a - 39 * b * b
        if d == 0:
            return 0
        return (1 if d > 0 else -1) * (1 if a > 0 else -1)

    def _cmp(self, o) -> int:
        return (self - o).sign()

    def __eq__(self, o):
        if not isinstance(o, (QSqrt39, int, Fraction)):
            return NotImplemented
        return self._cmp(o) == 0

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __lt__(self, o):
        return self._cmp(o) < 0

    def __le__(self, o):
        return self._cmp(o) <= 0

    def __gt__(self, o):
        return self._cmp(o) > 0

    def __ge__(self, o):
        return self._cmp(o) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 39 ** 0.5

    def __repr__(self):
        return f"QSqrt39({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt39"


MU = QSqrt39(F(5, 4), F(1, 4))
NU = QSqrt39(F(3, 4), F(1, 4))


# --------------------------------------------------------------------------
# containers

@dataclass(frozen=True)
class ReductionInstance:
    """Generated instance.

    ``objective`` says how ``threshold`` is read: "min_weight" (min size-k
    cover weight), "feasible" (some size-k cover exists), "radius_le" or
    "radius_lt" (discrete k-center radius, squared for L2), "count_ge"
    (max coverage by k ranges).
    """
    kind: str
    dim: int
    points: tuple
    ranges: Optional[tuple]
    threshold: Any
    k: int
    objective: str
    metric: Optional[str] = None
    meta: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class VerificationReport:
    kind: str
    source_answer: bool
    geometry_answer: bool
    source_value: Any
    geometry_value: Any
    threshold: Any
    value_match: bool = True

    @property
    def agree(self) -> bool:
        return self.source_answer == self.geometry_answer and self.value_match


# --------------------------------------------------------------------------
# helpers

def embed_unit_circle(x) -> tuple:
    """Rational point (2x/(x^2+1), (x^2-1)/(x^2+1)) on the unit circle."""
    x = rational(x)
    d = x * x + 1
    return (2 * x / d, (x * x - 1) / d)


def _check_graph(G: WeightedGraph, weighted: bool, zero: bool = True) -> None:
    labels = G.labels
    if any(t < 0 or t > TENTH for t in labels):
        raise ValueError("vertex labels must lie in [0, 1/10]")
    if TENTH not in labels:
        raise ValueError("label 1/10 must be present")
    if zero and 0 not in labels:
        raise ValueError("label 0 must be present")
    if not zero and 0 in labels:
        raise ValueError("label 0 is not allowed here")
    if weighted:
        for u, v, w in G.edges:
            if w is None:
                raise ValueError(f"edge ({u},{v}) has no weight")
            if w < 0 or w > TENTH:
                raise ValueError("edge weights must lie in [0, 1/10]")


class DegenerateSourceError(ValueError):
    """The source has no edge inside some group of parts, so the answer is trivially no
    and the construction's auxiliary points could be picked as centers themselves."""


def _require_group_edges(H: PartiteHypergraph3, groups) -> None:
    for g in groups:
        if not any({a for a, _ in e} == set(g) for e in H.edges):
            raise DegenerateSourceError(f"no edge inside parts {tuple(g)}; no hyperclique is possible")


def _check_hyper(H: PartiteHypergraph3, parts: int) -> None:
    if H.num_parts != parts:
        raise ValueError(f"expected {parts} parts, got {H.num_parts}")
    for p in H.parts:
        if any(t < 0 or t > 1 for t in p):
            raise ValueError("hypergraph labels must lie in [0, 1]")


def _arcs(G: WeightedGraph):
    """Both orientations of every edge: (label_a, label_b, weight)."""
    lab = G.labels
    for u, v, w in G.edges:
        yield lab[u], lab[v], w
        yield lab[v], lab[u], w


def _iv(lo, hi, lc=True, hc=True) -> Interval:
    return Interval(lo, hi, lc, hc)


def _open_hi(hi) -> Interval:
    return Interval(NEG_INF, hi, False, False)


def _closed_hi(hi) -> Interval:
    return Interval(NEG_INF, hi, False, True)


def _open_lo(lo) -> Interval:
    return Interval(lo, POS_INF, False, False)


def _closed_lo(lo) -> Interval:
    return Interval(lo, POS_INF, True, False)


def _weighted_family(points, shapes) -> tuple:
    """Rects from (sides, edge weight, tag); weight = points covered + edge weight."""
    out, tags = [], []
    for sides, w, tag in shapes:
        r = ExtRect(tuple(sides))
        cnt = sum(1 for p in points if point_in_rect(p, r))
        out.append(ExtRect(r.sides, cnt + (w or 0), len(out)))
        tags.append(tag)
    return tuple(out), tags


def _plain_family(shapes) -> tuple:
    rects = tuple(ExtRect(tuple(sides), None, i) for i, (sides, tag) in enumerate(shapes))
    return rects, [tag for _, tag in shapes]


# --------------------------------------------------------------------------
# graph sources

def gen_weighted_triangle_r2(G: WeightedGraph) -> ReductionInstance:
    """Weighted orthants in the plane; min size-3 cover weight is 3n + (min triangle weight)."""
    _check_graph(G, weighted=True)
    pts = []
    for t in G.labels:
        pts += [(t, 1 + t), (F(2), t), (1 + t, F(-1))]
    shapes = []
    for a, b, w in _arcs(G):
        shapes.append(((_open_hi(1 + b), _closed_hi(1 + a)), w, (1, a, b)))
    for a, b, w in _arcs(G):
        shapes.append(((_closed_lo(1 + a), _open_hi(b)), w, (2, a, b)))
    for a, b, w in _arcs(G):
        shapes.append(((_open_lo(b), _closed_lo(a)), w, (3, a, b)))
    rects, tags = _weighted_family(pts, shapes)
    return ReductionInstance("weighted_triangle_r2", 2, tuple(pts), rects, 3 * G.n, 3, "min_weight",
                             meta={"tags": tags, "n": G.n})


def gen_triangle_boxes_r3(G: WeightedGraph) -> ReductionInstance:
    """Boxes in R^3 with a size-3 cover iff G has a triangle."""
    _check_graph(G, weighted=False)
    pts = []
    for t in G.labels:
        pts += [(-1 + t, F(0), 2 + t), (1 + t, F(0), -2 + t), (2 + t, -1 + t, F(0)),
                (-2 + t, 1 + t, F(0)), (F(0), 2 + t, -1 + t), (F(0), -2 + t, 1 + t)]
    shapes = []
    for a, b, _ in _arcs(G):
        shapes.append(((_iv(-1 + a, 1 + a, False, False), _iv(-2 + b, 2 + b), REAL_LINE), (1, a, b)))
    for a, b, _ in _arcs(G):
        shapes.append(((_iv(-2 + b, 2 + b), REAL_LINE, _iv(-1 + a, 1 + a, False, False)), (2, a, b)))
    for a, b, _ in _arcs(G):
        shapes.append(((REAL_LINE, _iv(-1 + a, 1 + a, False, False), _iv(-2 + b, 2 + b)), (3, a, b)))
    rects, tags = _plain_family(shapes)
    return ReductionInstance("triangle_boxes_r3", 3, tuple(pts), rects, None, 3, "feasible",
                             meta={"tags": tags, "n": G.n})


def _orthants_r4(G: WeightedGraph) -> tuple:
    h = F(1, 2)
    pts = []
    for t in G.labels:
        pts += [(t, 2 + t, -h, -h), (2 - t, -t, -h, -h), (1 - t, h, 1 + t, F(3, 2)),
                (h, 1 + t, h, 2 - t), (-h, -h, 2 - t, -t), (-h, -h, t, 1 + t)]
    shapes = []
    for a, b, _ in _arcs(G):  # a = x1, b = x2'
        shapes.append(((_closed_lo(a), _closed_lo(-a), _open_hi(1 + b), _open_hi(2 - b)), (1, a, b)))
    for a, b, _ in _arcs(G):  # a = x2, b = x3'
        shapes.append(((_closed_hi(1 - a), _closed_hi(1 + a), _open_lo(b), _open_lo(-b)), (2, a, b)))
    for a, b, _ in _arcs(G):  # a = x3, b = x1'
        shapes.append(((_open_hi(2 - b), _open_hi(2 + b), _closed_hi(2 - a), _closed_hi(1 + a)), (3, a, b)))
    return pts, shapes


def gen_triangle_orthants_r4(G: WeightedGraph) -> ReductionInstance:
    """Orthants in R^4 with a size-3 cover iff G has a triangle."""
    _check_graph(G, weighted=False)
    pts, shapes = _orthants_r4(G)
    rects, tags = _plain_family(shapes)
    return ReductionInstance("triangle_orthants_r4", 4, tuple(pts), rects, None, 3, "feasible",
                             meta={"tags": tags, "n": G.n})


D3C_AUX = ((F(19, 2), F(19, 2), F(-17, 2), F(-15, 2)),
           (F(-17, 2), F(-17, 2), F(19, 2), F(19, 2)),
           (F(-15, 2), F(-15, 2), F(-15, 2), F(-17, 2)))


def gen_d3c_r4(G: WeightedGraph, with_aux: bool = True) -> ReductionInstance:
    """Point set in R^4 whose discrete 3-center L-infinity radius is at most 5 iff G has a triangle.

    Each orthant becomes the side-10 hypercube sharing its corner; its center
    joins the point set.
    """
    _check_graph(G, weighted=False)
    pts, shapes = _orthants_r4(G)
    # closed cubes cannot keep an open side, so an open corner coordinate moves
    # inward by a quarter of the smallest label gap; no point lies in between
    labels = sorted(G.labels)
    eps = min(b - a for a, b in zip(labels, labels[1:])) / 4
    centers = []
    for sides, _ in shapes:
        c = []
        for s in sides:
            if s.hi == POS_INF:
                c.append(s.lo + (0 if s.lo_closed else eps) + 5)
            else:
                c.append(s.hi - (0 if s.hi_closed else eps) - 5)
        centers.append(tuple(c))
    base = len(pts)
    allp = pts + centers + (list(D3C_AUX) if with_aux else [])
    return ReductionInstance("d3c_r4", 4, tuple(allp), None, F(5), 3, "radius_le", "linf",
                             meta={"n": G.n, "center_range": (base, base + len(centers)),
                                   "tags": [tag for _, tag in shapes]})


def gen_4clique_cover6_r2(G: WeightedGraph) -> ReductionInstance:
    """Weighted rectangles; min size-6 cover weight is 8n + (min 4-clique weight).

    Labels must be positive: a vertex labelled 0 would make the half-open
    sides [0, x) and (2 - x, 2] empty, so no clique through it could be used.
    """
    _check_graph(G, weighted=True, zero=False)
    pts = []
    for t in G.labels:
        pts += [(F(0), 2 - t), (t, F(0)), (F(2), t), (2 - t, F(2)),
                (F(1), t), (F(1), 2 - t), (t, F(1)), (2 - t, F(1))]
    two, one, e = F(2), F(1), F(11, 10)
    shapes = []
    for a, b, w in _arcs(G):  # x1, x2'
        shapes.append(((_iv(0, b, True, False), _iv(0, 2 - a)), w, (1, a, b)))
    for a, b, w in _arcs(G):  # x2, x3'
        shapes.append(((_iv(a, two), _iv(0, b, True, False)), w, (2, a, b)))
    for a, b, w in _arcs(G):  # x3, x4'
        shapes.append(((_iv(2 - b, two, False, True), _iv(a, two)), w, (3, a, b)))
    for a, b, w in _arcs(G):  # x4, x1'
        shapes.append(((_iv(0, 2 - a), _iv(2 - b, two, False, True)), w, (4, a, b)))
    for a, b, w in _arcs(G):  # x1'', x3''
        shapes.append(((_iv(one, e), _iv(b, 2 - a)), w, (5, a, b)))
    for a, b, w in _arcs(G):  # x2'', x4''
        shapes.append(((_iv(a, 2 - b), _iv(one, e)), w, (6, a, b)))
    rects, tags = _weighted_family(pts, shapes)
    return ReductionInstance("cover6_r2", 2, tuple(pts), rects, 8 * G.n, 6, "min_weight",
                             meta={"tags": tags, "n": G.n})


# --------------------------------------------------------------------------
# hypergraph sources

def _part_triples(H: PartiteHypergraph3, i: int, j: int, k: int):
    """All vertex triples across parts i < j < k, with edge membership."""
    E = H.edge_set()
    for a, b, c in itertools.product(range(len(H.parts[i])), range(len(H.parts[j])),
                                     range(len(H.parts[k]))):
        tri = ((i, a), (j, b), (k, c))
        yield tri, tri in E


def gen_hyperclique_d2c_r13(H: PartiteHypergraph3) -> ReductionInstance:
    """Points in R^13 whose Euclidean discrete 2-center squared radius is < 41/4 iff H has a 6-hyperclique."""
    _check_hyper(H, 6)
    _require_group_edges(H, ((0, 1, 2), (3, 4, 5)))
    emb = [[embed_unit_circle(t) for t in part] for part in H.parts]
    zero = F(0)
    pts, tags = [], []
    for i, j, k in itertools.combinations(range(6), 3):
        side = {i, j, k}
        for tri, is_edge in _part_triples(H, i, j, k):
            if side == {0, 1, 2} or side == {3, 4, 5}:
                if not is_edge:
                    continue
                c = [zero] * 13
                for part, idx in tri:
                    c[2 * part], c[2 * part + 1] = emb[part][idx]
                c[12] = F(1) if side == {0, 1, 2} else F(-1)
                pts.append(tuple(c))
                tags.append(("p" if side == {0, 1, 2} else "q", tri))
            elif not is_edge:
                c = [zero] * 13
                for part, idx in tri:
                    f, g = emb[part][idx]
                    c[2 * part], c[2 * part + 1] = -f, -g
                c[12] = len(side & {0, 1, 2}) - F(3, 2)
                pts.append(tuple(c))
                tags.append(("z", tri))
    for s in (F(7, 2), F(-7, 2)):
        pts.append(tuple([zero] * 12 + [s]))
        tags.append(("s+" if s > 0 else "s-", None))
    return ReductionInstance("d2c_r13", 13, tuple(pts), None, F(41, 4), 2, "radius_lt", "l2",
                             meta={"tags": tags})


def gen_hyperclique_dkc(H: PartiteHypergraph3, kappa: int) -> ReductionInstance:
    """Points in R^(7 kappa) whose Euclidean discrete kappa-center squared radius is < 16
    iff H has a (3 kappa)-hyperclique.  Two coordinates use mu, nu from Q(sqrt 39)."""
    if kappa < 2:
        raise ValueError("kappa must be at least 2")
    _check_hyper(H, 3 * kappa)
    _require_group_edges(H, [(3 * t, 3 * t + 1, 3 * t + 2) for t in range(kappa)])
    m, dim = 3 * kappa, 7 * kappa
    emb = [[embed_unit_circle(t) for t in part] for part in H.parts]
    zero = F(0)
    pts, tags = [], []
    for i, j, k in itertools.combinations(range(m), 3):
        groups = (i // 3, j // 3, k // 3)
        same = len(set(groups)) == 1
        for tri, is_edge in _part_triples(H, i, j, k):
            if same:
                if not is_edge:
                    continue
                t = groups[0]
                c = [zero] * dim
                for part, idx in tri:
                    c[2 * part], c[2 * part + 1] = emb[part][idx]
                c[6 * kappa + t] = F(2)
                pts.append(tuple(c))
                tags.append((f"p{t}", tri))
            elif not is_edge:
                c = [zero] * dim
                for part, idx in tri:
                    f, g = emb[part][idx]
                    c[2 * part], c[2 * part + 1] = -f, -g
                cnt = Counter(groups)
                if len(cnt) == 3:
                    for gr in groups:
                        c[6 * kappa + gr] = F(2)
                else:
                    for gr, mult in cnt.items():
                        c[6 * kappa + gr] = MU if mult == 2 else NU
                pts.append(tuple(c))
                tags.append(("z", tri))
    for t in range(kappa):
        c = [zero] * dim
        c[6 * kappa + t] = F(28, 5)
        pts.append(tuple(c))
        tags.append((f"s{t}", None))
    return ReductionInstance("dkc", dim, tuple(pts), None, F(16), kappa, "radius_lt", "l2",
                             meta={"tags": tags, "kappa": kappa})


def _maxcov_triples():
    halves = ((0, 1, 2), (3, 4, 5))
    for h in (0, 1):
        S, T = halves[h], halves[1 - h]
        for i, j in itertools.combinations(S, 2):
            for k in T:
                yield S, T, i, j, k


def maxcov_point_count(H: PartiteHypergraph3, anchors: bool = True) -> int:
    """Closed form for the point multiset size: sum over the 18 triples of n^3 + e(i, j, k),
    plus the two anchor points."""
    n = len(H.parts[0])
    total = 0
    for _, _, i, j, k in _maxcov_triples():
        parts = {i, j, k}
        e = sum(1 for tri in H.edges if {a for a, _ in tri} == parts)
        total += n ** 3 + e
    return total + (2 if anchors else 0)


def gen_maxcov2_r12(H: PartiteHypergraph3, anchors: bool = True) -> ReductionInstance:
    """Orthants and a point multiset in R^12; two orthants cover >= 18(n^2+n) points iff H has a 6-hyperclique.

    Infinite point coordinates are the sentinels -100 / +100.

    Two orthants from the same half can be disjoint and reach 18(n^2+n) on
    their own.  With ``anchors`` (the default) one extra point is added per
    half, covered by every orthant of that half and by none of the other, and
    the threshold becomes 18(n^2+n) + 2; a same-half pair then falls one
    short.  ``anchors=False`` gives the bare construction.
    """
    _check_hyper(H, 6)
    n = len(H.parts[0])
    if any(len(p) != n for p in H.parts):
        raise ValueError("every part must hold the same number of vertices")
    E = H.edge_set()
    lab = H.parts
    lo, hi = -SENTINEL, SENTINEL

    def put(c, part, idx):
        c[2 * part], c[2 * part + 1] = lab[part][idx], -lab[part][idx]

    shapes = []
    for base in (0, 3):
        for tri, is_edge in _part_triples(H, base, base + 1, base + 2):
            if not is_edge:
                continue
            sides = [REAL_LINE] * 12
            for part, idx in tri:
                x = lab[part][idx]
                sides[2 * part], sides[2 * part + 1] = _closed_hi(x), _closed_hi(-x)
            shapes.append((sides, tri))
    rects, rtags = _plain_family(shapes)

    pts, tags = [], []
    for S, T, i, j, k in _maxcov_triples():
        key = (i, j, k)
        (l,) = set(S) - {i, j}
        # d_k(v_i v_j) and d_ij(v_k)
        dk, dij = Counter(), Counter()
        for tri in E:
            parts = {a: b for a, b in tri}
            if set(parts) == {i, j, k}:
                dk[(parts[i], parts[j])] += 1
                dij[parts[k]] += 1
        for vi, vj, vk in itertools.product(range(n), repeat=3):
            tri = tuple(sorted(((i, vi), (j, vj), (k, vk))))
            if tri in E:
                continue
            c = [lo] * 12
            put(c, i, vi), put(c, j, vj), put(c, k, vk)
            pts.append(tuple(c))
            tags.append((key, "triple", (vi, vj, vk)))
        for vi, vj in itertools.product(range(n), repeat=2):
            c = [hi] * 12
            c[2 * l] = c[2 * l + 1] = lo
            put(c, i, vi), put(c, j, vj)
            for _ in range(dk[(vi, vj)]):
                pts.append(tuple(c))
                tags.append((key, "pair", (vi, vj)))
        for vk in range(n):
            c = [hi] * 12
            for part in T:
                c[2 * part] = c[2 * part + 1] = lo
            put(c, k, vk)
            for _ in range(dij[vk]):
                pts.append(tuple(c))
                tags.append((key, "single", (vk,)))
    thr = 18 * (n * n + n)
    if anchors:
        pts.append(tuple([lo] * 6 + [hi] * 6))
        pts.append(tuple([hi] * 6 + [lo] * 6))
        tags += [(None, "anchor", (0,)), (None, "anchor", (1,))]
        thr += 2
    return ReductionInstance("maxcov2_r12", 12, tuple(pts), rects, thr, 2, "count_ge",
                             meta={"tags": tags, "range_tags": rtags, "n": n})


# --------------------------------------------------------------------------
# verification

def verify_reduction(kind: str, source, instance: ReductionInstance,
                     budget: OracleBudget = DEFAULT_BUDGET) -> VerificationReport:
    """Answer the source question and the geometric question by brute force and compare."""
    inst = instance
    P, R = list(inst.points), list(inst.ranges or ())
    if kind in ("weighted_triangle_r2", "cover6_r2"):
        best = graph_min_triangle(source) if kind == "weighted_triangle_r2" else graph_min_4clique(source)
        target = None if best is None else best[1]
        if inst.k <= 3:
            got = brute_cover_k(P, R, inst.k, weighted=True, budget=budget)
        else:
            got = branch_cover_k(P, R, inst.k, budget=budget)
        value = None if got is None else got[1]
        # a cover lighter than base + 1 decodes to a clique of weight value - base
        geo = value is not None and value < inst.threshold + 1
        match = target is None or value == inst.threshold + target
        return VerificationReport(kind, target is not None, geo, target, value, inst.threshold, match)
    if kind in ("triangle_boxes_r3", "triangle_orthants_r4"):
        src = graph_has_triangle(source)
        got = brute_cover_k(P, R, 3, weighted=False, budget=budget)
        return VerificationReport(kind, src, got is not None, src, None if got is None else got[0], None)
    if kind == "d3c_r4":
        src = graph_has_triangle(source)
        budget.check_points(len(P), "d3c_r4")
        got = brute_kcenter_decide(P, 3, inst.threshold, "linf")
        return VerificationReport(kind, src, got is not None, src, got, inst.threshold)
    if kind in ("d2c_r13", "dkc"):
        src = hyperclique(source)
        budget.check_points(len(P), kind)
        got = brute_kcenter_decide(P, inst.k, inst.threshold, "l2", strict=True)
        return VerificationReport(kind, src, got is not None, src, got, inst.threshold)
    if kind == "maxcov2_r12":
        src = hyperclique(source)
        if len(R) >= 2:
            ids, count = brute_maxcov(P, R, 2, budget=budget)
        else:
            ids = tuple(r.id for r in R)
            count = max((sum(point_in_rect(p, r) for p in P) for r in R), default=0)
        return VerificationReport(kind, src, count >= inst.threshold, src, count, inst.threshold)
    raise ValueError(f"unknown reduction kind {kind!r}")


GENERATORS = {
    "weighted_triangle_r2": gen_weighted_triangle_r2,
    "triangle_boxes_r3": gen_triangle_boxes_r3,
    "triangle_orthants_r4": gen_triangle_orthants_r4,
    "d3c_r4": gen_d3c_r4,
    "cover6_r2": gen_4clique_cover6_r2,
    "d2c_r13": gen_hyperclique_d2c_r13,
    "dkc": gen_hyperclique_dkc,
    "maxcov2_r12": gen_maxcov2_r12,
}


def generate(kind: str, source, kappa: int = 2) -> ReductionInstance:
    if kind not in GENERATORS:
        raise ValueError(f"unknown reduction kind {kind!r}; choose from {', '.join(KINDS)}")
    if kind == "dkc":
        return gen_hyperclique_dkc(source, kappa)
    return GENERATORS[kind](source)


__all__ = [
    "KINDS", "DegenerateSourceError", "QSqrt39", "MU", "NU", "ReductionInstance", "VerificationReport", "embed_unit_circle",
    "gen_weighted_triangle_r2", "gen_triangle_boxes_r3", "gen_triangle_orthants_r4", "gen_d3c_r4",
    "gen_4clique_cover6_r2", "gen_hyperclique_d2c_r13", "gen_hyperclique_dkc", "gen_maxcov2_r12",
    "maxcov_point_count", "verify_reduction", "generate", "D3C_AUX", "SENTINEL",
]
