"""Minimum-weight covers of a planar point set by three rectangles.

All variants share one pipeline: exact coordinates are compressed to point
ranks, weights are scaled to int64, rectangles are extended to infinity past
the bounding box of P, and the numba engine runs the enabled steps.  The
returned triple is re-checked with exact arithmetic before it is reported.
"""
from __future__ import annotations

import enum
import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import _engine as E
from .geom_core import ExtRect, OpenSideError, Point, check_dims, covers_all
from .grid import Grid, build_grid_struct, extend_rects
from .pair_oracle import build_rect_struct
from .range_index import build_point_struct, kd_build, kd_top3

I64 = np.int64
_WMAX = (1 << 62) // 3


class NotUnitSquareError(ValueError):
    """A unit-square solver received a rectangle that is not a closed unit square."""


class WeightedInputError(ValueError):
    """An unweighted solver received weights other than 1."""


class InvalidConfigError(ValueError):
    pass


class Provenance(enum.Enum):
    STEP1 = 0
    STEP2 = 1
    STEP3 = 2
    CASE_I = 3
    CASE_II = 4
    CASE_III = 5
    UNIT_CASE_II = 6
    UNIT_CASE_III = 7


class Variant(enum.Enum):
    AUTO = "auto"
    BASIC = "basic"
    UNWEIGHTED = "unweighted"
    WEIGHTED_RECT = "weighted_rect"
    UNIT_W = "unit_w"
    UNIT_UNW = "unit_unw"
    ORACLE = "oracle"


STAT_NAMES = ("step1_pairs", "step2_pairs", "configs", "branches", "walk_failures",
              "case1_guesses", "case2_guesses", "case3_guesses", "pruned")


@dataclass(frozen=True)
class Cover3Solution:
    ids: tuple
    weight: Fraction
    provenance: Provenance
    stats: dict = field(default_factory=dict, compare=False)


# --------------------------------------------------------------------------
# input handling

def _rect_weight(r: ExtRect) -> Fraction:
    return r.weight if r.weight is not None else Fraction(1)


def _is_weighted(R: Sequence[ExtRect]) -> bool:
    return any(r.weight is not None and r.weight != 1 for r in R)


def _is_unit_square(r: ExtRect) -> bool:
    return r.is_closed and all(s.hi - s.lo == 1 for s in r.sides)


def _validate(P, R, unit: bool = False):
    check_dims(P, R, 2)
    for r in R:
        if not r.is_closed:
            raise OpenSideError(f"rectangle {r.id} has an open or infinite side")
        if unit and not _is_unit_square(r):
            raise NotUnitSquareError(f"rectangle {r.id} is not a unit square")


def _sorted_rects(R):
    if any(r.id is None for r in R):
        R = [r if r.id is not None else ExtRect(r.sides, r.weight, k) for k, r in enumerate(R)]
    rects = sorted(R, key=lambda r: r.id)
    ids = [r.id for r in rects]
    if len(set(ids)) != len(ids):
        raise ValueError("rectangle ids must be distinct")
    return rects


def _int_weights(ws: Sequence[Fraction]) -> np.ndarray:
    den = 1
    for w in ws:
        den = math.lcm(den, w.denominator)
    out = [int(w * den) for w in ws]
    if any(abs(v) > _WMAX for v in out):
        raise OverflowError("weights too large or too finely divided for int64 sums")
    return np.array(out, dtype=I64)


@dataclass
class _Prepared:
    rects: list
    S: object
    xl: np.ndarray
    xh: np.ndarray
    yl: np.ndarray
    yh: np.ndarray
    w: np.ndarray


def _prepare(P, rects, weighted: bool) -> _Prepared:
    xs = sorted({p[0] for p in P})
    ys = sorted({p[1] for p in P})
    K, L = len(xs), len(ys)
    px = np.array([bisect_left(xs, p[0]) for p in P], dtype=I64)
    py = np.array([bisect_left(ys, p[1]) for p in P], dtype=I64)
    S = build_point_struct(px, py, K, L)

    def lo(vals, v, top):
        r = bisect_left(vals, v)
        return -1 if r == 0 else r

    def hi(vals, v, top):
        r = bisect_right(vals, v) - 1
        return top if r == top - 1 else r

    # rank sides; a side at or beyond the bounding box of P becomes infinite
    xl = np.array([lo(xs, r.sides[0].lo, K) for r in rects], dtype=I64)
    xh = np.array([hi(xs, r.sides[0].hi, K) for r in rects], dtype=I64)
    yl = np.array([lo(ys, r.sides[1].lo, L) for r in rects], dtype=I64)
    yh = np.array([hi(ys, r.sides[1].hi, L) for r in rects], dtype=I64)
    ws = [_rect_weight(r) if weighted else Fraction(1) for r in rects]
    return _Prepared(rects, S, xl, xh, yl, yh, _int_weights(ws))


def _default_g(n: int, exponent: Fraction) -> int:
    return max(1, math.ceil(n ** float(exponent) - 1e-9))


# --------------------------------------------------------------------------
# step-3 configuration tables

def _popcount(p: int) -> int:
    return bin(p).count("1")


def _sig_table(GS, idx):
    """Distinct finite-side signatures grouped by pattern: (sigs, gptr)."""
    G, H = GS.G, GS.H
    rows = set()
    for i in idx:
        rows.add((int(GS.cxl[i]), int(GS.cxh[i]), int(GS.ryl[i]), int(GS.ryh[i])))
    keyed = sorted(rows, key=lambda s: (_pattern(s, G, H), s))
    sigs = np.array(keyed, dtype=I64).reshape(-1, 4)
    gptr = np.zeros(17, dtype=I64)
    for s in keyed:
        gptr[_pattern(s, G, H) + 1] += 1
    return sigs, np.cumsum(gptr).astype(I64)


def _pattern(s, G, H) -> int:
    return int(s[0] >= 0) | int(s[1] < G) << 1 | int(s[2] >= 0) << 2 | int(s[3] < H) << 3


def _partial_table(sigs, gptr, G, H):
    # signatures with one bounded side forgotten, grouped by pattern*4 + side
    groups = [set() for _ in range(64)]
    for p in range(16):
        for t in range(gptr[p], gptr[p + 1]):
            s = tuple(int(v) for v in sigs[t])
            for d in range(4):
                if p >> d & 1:
                    ps = list(s)
                    ps[d] = -1 if d in (0, 2) else (G if d == 1 else H)
                    groups[p * 4 + d].add(tuple(ps))
    rows, ptr = [], [0]
    for gset in groups:
        rows.extend(sorted(gset))
        ptr.append(len(rows))
    return np.array(rows, dtype=I64).reshape(-1, 4), np.array(ptr, dtype=I64)


def _triples(max_finite: int, hidden_mode: bool):
    out = []
    pats = range(1, 16)
    if not hidden_mode:
        for a in pats:
            for b in pats:
                if b < a:
                    continue
                for c in pats:
                    if c < b:
                        continue
                    if ((~a | ~b | ~c) & 15) != 15:
                        continue
                    if _popcount(a) + _popcount(b) + _popcount(c) > max_finite:
                        continue
                    out.append((a, b, c, -1))
    else:
        for a in pats:
            for b in pats:
                if b < a:
                    continue
                for c in pats:
                    if _popcount(a) + _popcount(b) + _popcount(c) != 8:
                        continue
                    if ((~a | ~b | ~c) & 15) != 15:
                        continue
                    if _popcount(c) < max(_popcount(a), _popcount(b)):
                        continue
                    hid = (c & -c).bit_length() - 1
                    out.append((a, b, c, hid))
    return np.array(out, dtype=I64).reshape(-1, 4)


# --------------------------------------------------------------------------
# maximal filtering in rank space

def _maximal_mask(xl, xh, yl, yh) -> np.ndarray:
    """True for rectangles not strictly inside another one (equal copies keep the lowest index)."""
    m = xl.shape[0]
    keys = np.stack([xl, -xh, yl, -yh], axis=1).astype(I64)
    uniq, first = np.unique(keys, axis=0, return_index=True)
    # weights carry the key's rank so the kd-tree reports distinct keys
    T = kd_build(np.ascontiguousarray(uniq), np.arange(len(uniq), dtype=I64))
    best = np.full(3, -1, dtype=I64)
    keep_key = np.zeros(len(uniq), dtype=bool)
    for u in range(len(uniq)):
        c = kd_top3(T, int(uniq[u, 0]), int(uniq[u, 1]), int(uniq[u, 2]), int(uniq[u, 3]), best)
        keep_key[u] = c < 2  # only the key itself dominates it
    mask = np.zeros(m, dtype=bool)
    mask[first[keep_key]] = True
    return mask


# --------------------------------------------------------------------------
# engine driver

ALL_STEPS = frozenset({"special", "pair", "step1", "step2", "step3", "case1", "case2", "case3"})


def _run(P, R, g: Optional[int], mode: str, weighted: bool, unit: bool,
         filter_maximal: bool, steps=ALL_STEPS, report: Optional[dict] = None) -> Optional[Cover3Solution]:
    rects = _sorted_rects(list(R))
    if len(rects) < 3:
        return None
    P = list(P)
    if not P:
        ws = [_rect_weight(r) if weighted else Fraction(1) for r in rects]
        order = sorted(range(len(rects)), key=lambda i: (ws[i], i))[:3]
        return _finish(P, rects, order, ws, E.P_STEP1, np.zeros(E.N_STATS, dtype=I64))
    prep = _prepare(P, rects, weighted)
    idx = np.arange(len(rects))
    if filter_maximal:
        idx = np.flatnonzero(_maximal_mask(prep.xl, prep.xh, prep.yl, prep.yh))
        if len(idx) < 3:
            return _small_family(P, rects, idx)
    n = max(len(P), len(rects))
    if g is None:
        g = _default_g(n, _EXPONENTS[mode])
    if g < 1:
        raise ValueError("g must be positive")
    xl, xh, yl, yh, w = (a[idx].copy() for a in (prep.xl, prep.xh, prep.yl, prep.yh, prep.w))
    S = prep.S
    RS = build_rect_struct(xl, xh, yl, yh, w, unit)
    GS = build_grid_struct(S, xl, xh, yl, yh, g, len(idx))
    best = np.zeros(6, dtype=I64)
    stats = np.zeros(E.N_STATS, dtype=I64)
    if "special" in steps:
        E.run_special(S, RS, best)
    if "pair" in steps:
        E.run_pair_cover(S, RS, best)
    if "step1" in steps:
        E.run_step1(S, RS, GS, best, stats)
    if "step2" in steps:
        E.run_step2(S, RS, GS, best, stats)
    live = [t for t in range(len(idx)) if max(xl[t], 0) <= min(xh[t], S.K - 1)
            and max(yl[t], 0) <= min(yh[t], S.L - 1)]
    sigs, gptr = _sig_table(GS, live)
    no_partial = np.zeros(65, dtype=I64)
    if mode in ("basic", "unweighted"):
        if "step3" in steps:
            E.run_step3(S, RS, GS, sigs, gptr, sigs, no_partial, _triples(12, False),
                        best, stats, E.P_STEP3)
    elif mode == "weighted_rect":
        if "case1" in steps:
            E.run_case1(S, RS, GS, best, stats)
        if "case2" in steps:
            E.run_step3(S, RS, GS, sigs, gptr, sigs, no_partial, _triples(7, False),
                        best, stats, E.P_CASE_II)
            psigs, pptr = _partial_table(sigs, gptr, GS.G, GS.H)
            E.run_step3(S, RS, GS, sigs, gptr, psigs, pptr, _triples(8, True), best, stats,
                        E.P_CASE_II)
        if "case3" in steps:
            two = np.array([s for s in sigs.tolist() if _popcount(_pattern(s, GS.G, GS.H)) <= 2],
                           dtype=I64).reshape(-1, 4)
            E.run_rect_case3(S, RS, GS, two, best, stats)
    else:
        if "case1" in steps:
            E.run_case1(S, RS, GS, best, stats)
        if "case2" in steps:
            E.run_unit_case2(S, RS, best, stats)
        if "case3" in steps:
            E.run_unit_case3(S, RS, GS, best, stats)
    if report is not None:
        report.update({k: int(v) for k, v in zip(STAT_NAMES, stats)})
        report.update(g=int(g), G=int(GS.G), H=int(GS.H), filtered=len(idx))
    if not best[5]:
        return None
    order = [int(idx[best[1]]), int(idx[best[2]]), int(idx[best[3]])]
    ws = [_rect_weight(r) if weighted else Fraction(1) for r in rects]
    return _finish(P, rects, order, ws, int(best[4]), stats, g)


_EXPONENTS = {
    "basic": Fraction(2, 9),
    "unweighted": Fraction(1, 3),
    "weighted_rect": Fraction(1, 4),
    "unit_w": Fraction(2, 5),
    "unit_unw": Fraction(1, 2),
}


def _finish(P, rects, order, ws, prov, stats, g=None) -> Cover3Solution:
    chosen = [rects[i] for i in sorted(order)]
    if not covers_all(chosen, P):
        raise AssertionError("engine returned a triple that does not cover P")
    st = {k: int(v) for k, v in zip(STAT_NAMES, stats)}
    if g is not None:
        st["g"] = int(g)
    return Cover3Solution(tuple(r.id for r in chosen), sum((ws[i] for i in order), Fraction(0)),
                          Provenance(prov), st)


def _small_family(P, rects, idx) -> Optional[Cover3Solution]:
    # fewer than three maximal rectangles: they cover P or nothing does
    fam = [rects[i] for i in idx]
    if not covers_all(fam, P):
        return None
    order = [int(i) for i in idx]
    for i in range(len(rects)):
        if len(order) == 3:
            break
        if i not in order:
            order.append(i)
    return _finish(P, rects, order, [Fraction(1)] * len(rects), E.P_STEP1,
                   np.zeros(E.N_STATS, dtype=I64))


# --------------------------------------------------------------------------
# public solvers

def solve_basic(P: Sequence[Point], R: Sequence[ExtRect], g: Optional[int] = None,
                report: Optional[dict] = None) -> Optional[Cover3Solution]:
    _validate(P, R)
    return _run(P, R, g, "basic", True, False, False, report=report)


def solve_unweighted(P: Sequence[Point], R: Sequence[ExtRect], g: Optional[int] = None,
                     report: Optional[dict] = None) -> Optional[Cover3Solution]:
    _validate(P, R)
    if _is_weighted(R):
        raise WeightedInputError("weighted input: use solve_basic or solve_weighted_rect")
    return _run(P, R, g, "unweighted", False, False, True, report=report)


def solve_weighted_rect(P: Sequence[Point], R: Sequence[ExtRect], g: Optional[int] = None,
                        report: Optional[dict] = None) -> Optional[Cover3Solution]:
    _validate(P, R)
    return _run(P, R, g, "weighted_rect", True, False, False, report=report)


def solve_unit_squares_weighted(P: Sequence[Point], R: Sequence[ExtRect], g: Optional[int] = None,
                                report: Optional[dict] = None) -> Optional[Cover3Solution]:
    _validate(P, R, unit=True)
    return _run(P, R, g, "unit_w", True, True, False, report=report)


def solve_unit_squares_unweighted(P: Sequence[Point], R: Sequence[ExtRect], g: Optional[int] = None,
                                  report: Optional[dict] = None) -> Optional[Cover3Solution]:
    _validate(P, R, unit=True)
    if _is_weighted(R):
        raise WeightedInputError("weighted input: use solve_unit_squares_weighted")
    return _run(P, R, g, "unit_unw", False, True, True, report=report)


def _solve_oracle(P, R, g=None, report=None) -> Optional[Cover3Solution]:
    from .oracles import brute_cover_k

    _validate(P, R)
    rects = _sorted_rects(list(R))
    res = brute_cover_k(list(P), rects, 3, weighted=True)
    if res is None:
        return None
    return Cover3Solution(tuple(res[0]), res[1], Provenance.STEP1, {"oracle": 1})


_DISPATCH = {
    Variant.BASIC: solve_basic,
    Variant.UNWEIGHTED: solve_unweighted,
    Variant.WEIGHTED_RECT: solve_weighted_rect,
    Variant.UNIT_W: solve_unit_squares_weighted,
    Variant.UNIT_UNW: solve_unit_squares_unweighted,
    Variant.ORACLE: _solve_oracle,
}


def pick_variant(R: Sequence[ExtRect]) -> Variant:
    """Most specific variant that applies to R."""
    unit = bool(R) and all(_is_unit_square(r) for r in R)
    weighted = _is_weighted(R)
    if unit:
        return Variant.UNIT_W if weighted else Variant.UNIT_UNW
    return Variant.WEIGHTED_RECT if weighted else Variant.UNWEIGHTED


def solve(P: Sequence[Point], R: Sequence[ExtRect], variant="auto",
          g: Optional[int] = None, report: Optional[dict] = None) -> Optional[Cover3Solution]:
    """Dispatch to one variant.  When ``report`` is a dict it receives the engine counters, even for infeasible input."""
    v = Variant(variant) if not isinstance(variant, Variant) else variant
    if v is Variant.AUTO:
        v = pick_variant(R)
    if report is not None:
        report["variant"] = v.value
    return _DISPATCH[v](P, R, g, report)


# --------------------------------------------------------------------------
# cell classification for one guessed arrangement

@dataclass(frozen=True)
class GuessConfig:
    """Per guessed rectangle: (left column, right column, bottom row, top row); None marks an unbounded side."""
    rects: tuple
    ncols: int
    nrows: int

    def __post_init__(self):
        if len(self.rects) != 3:
            raise InvalidConfigError("a configuration has three rectangles")
        for r in self.rects:
            if len(r) != 4:
                raise InvalidConfigError("each rectangle needs four sides")
            for d, v in enumerate(r):
                size = self.ncols if d < 2 else self.nrows
                if v is not None and not 0 <= v < size:
                    raise InvalidConfigError(f"side index {v} out of range")
            for a, b in ((0, 1), (2, 3)):
                if r[a] is not None and r[b] is not None and r[a] > r[b]:
                    raise InvalidConfigError("left/bottom side after right/top side")
        for s in range(3):
            for t in range(s + 1, 3):
                for lo, hi in ((0, 2), (2, 4)):
                    a = {v for v in self.rects[s][lo:hi] if v is not None}
                    b = {v for v in self.rects[t][lo:hi] if v is not None}
                    if a & b:
                        raise InvalidConfigError("sides of different rectangles share a column or row")

    def extent(self, s: int) -> tuple:
        xl, xh, yl, yh = self.rects[s]
        return (-1 if xl is None else xl, self.ncols if xh is None else xh,
                -1 if yl is None else yl, self.nrows if yh is None else yh)


@dataclass(frozen=True)
class CellAssignment:
    """cells maps (column, row) -> (type, frozenset of 1-based rectangle indices)."""
    cells: dict

    def of_type(self, t: str) -> dict:
        return {c: v[1] for c, v in self.cells.items() if v[0] == t}


def _cell_status(ext, i, j):
    xl, xh, yl, yh = ext
    if not (xl <= i <= xh and yl <= j <= yh):
        return "out"
    if xl < i < xh and yl < j < yh:
        return "in"
    return "edge"


def classify_cells(cfg: GuessConfig, grid=None) -> CellAssignment:
    """Type every cell met by the guessed arrangement: A (inside), B (one edge owner), C (walk rule)."""
    if grid is not None and isinstance(grid, Grid):
        if (grid.ncols, grid.nrows) != (cfg.ncols, cfg.nrows):
            raise InvalidConfigError("configuration does not match the grid size")
    G, H = cfg.ncols, cfg.nrows
    ext = [cfg.extent(s) for s in range(3)]
    cells = {}
    for i in range(G):
        for j in range(H):
            st = [_cell_status(e, i, j) for e in ext]
            inside = [s for s in range(3) if st[s] == "in"]
            edges = [s for s in range(3) if st[s] == "edge"]
            if inside:
                cells[(i, j)] = ("A", frozenset(s + 1 for s in inside))
            elif len(edges) == 1:
                cells[(i, j)] = ("B", frozenset({edges[0] + 1}))
            elif len(edges) >= 2:
                owner = _walk_owner(ext, i, j, edges, G, H)
                cells[(i, j)] = ("C", frozenset() if owner is None else frozenset({owner + 1}))
    return CellAssignment(cells)


def _walk_owner(ext, i, j, edges, G, H):
    def clear(k, cells):
        return all(_cell_status(ext[t], a, b) == "out" for t in range(3) if t != k for a, b in cells)

    for k in edges:
        xl, xh, yl, yh = ext[k]
        if j in (yl, yh):
            if clear(k, [(a, j) for a in range(max(xl, 0), i)]):
                return k
            if clear(k, [(a, j) for a in range(i + 1, min(xh, G - 1) + 1)]):
                return k
        if i in (xl, xh):
            if clear(k, [(i, b) for b in range(max(yl, 0), j)]):
                return k
            if clear(k, [(i, b) for b in range(j + 1, min(yh, H - 1) + 1)]):
                return k
    return None


__all__ = [
    "Cover3Solution", "Provenance", "Variant", "GuessConfig", "CellAssignment",
    "NotUnitSquareError", "WeightedInputError", "InvalidConfigError",
    "solve_basic", "solve_unweighted", "solve_weighted_rect", "solve_unit_squares_weighted",
    "solve_unit_squares_unweighted", "classify_cells", "solve", "pick_variant", "STAT_NAMES",
]
