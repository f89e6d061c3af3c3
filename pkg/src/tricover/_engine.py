"""Numba kernels behind cover3.

Everything is in rank space: points carry integer x/y ranks, rectangles carry
extended rank sides (-1 and K / L for infinite sides), and the grid maps ranks
to columns/rows.  Rectangles are indexed in sorted-id order and weights are
int64, so comparing (weight, index) triples reproduces the lexicographic
tie-break on ids.

Slot roles in a Step-3 configuration: ENCLOSE slots get a bounding box and an
enclosure query, a THIRD slot is completed through the pair oracle.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from .grid import cell_block, gamma_pair
from .pair_oracle import _decompose, best_third_idx, best_third_ws, enc_top3, first_not, region_bbox
from .range_index import ps_box_extremes

# stats slots
ST_STEP1, ST_STEP2, ST_CFG, ST_BRANCH, ST_WALKFAIL, ST_CASE1, ST_CASE2, ST_CASE3, ST_PRUNE = range(9)
N_STATS = 9

# provenance codes, in the order of cover3.Provenance
P_STEP1, P_STEP2, P_STEP3, P_CASE_I, P_CASE_II, P_CASE_III, P_UNIT_II, P_UNIT_III = range(8)

ENCLOSE = 0
THIRD = 1

OUT, IN, EDGE, MAYBE = 0, 1, 2, 3
PARTIAL = 2


@njit(cache=True)
def consider(RS, best, i, j, k, prov):
    """Keep the lighter of the current best and {i, j, k}; equal weights fall back to the sorted triple."""
    if i < 0 or j < 0 or k < 0 or i == j or j == k or i == k:
        return
    a, b, c = i, j, k
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
    if a > b:
        a, b = b, a
    W = RS.w[a] + RS.w[b] + RS.w[c]
    if best[5] == 0:
        upd = True
    elif W != best[0]:
        upd = W < best[0]
    elif a != best[1]:
        upd = a < best[1]
    elif b != best[2]:
        upd = b < best[2]
    else:
        upd = c < best[3]
    if upd:
        best[0] = W
        best[1] = a
        best[2] = b
        best[3] = c
        best[4] = prov
        best[5] = 1


@njit(cache=True)
def _pair(S, RS, best, i, j, prov, ws):
    if i == j:
        return
    k = best_third_ws(S, RS, i, j, ws)
    consider(RS, best, i, j, k, prov)


# --------------------------------------------------------------------------
# special triples

@njit(cache=True)
def run_special(S, RS, best):
    """Triples containing a rectangle that covers everything (all sides infinite)."""
    for i in range(RS.m):
        if RS.xl[i] < 0 and RS.xh[i] >= S.K and RS.yl[i] < 0 and RS.yh[i] >= S.L:
            others = np.full(2, -1, dtype=np.int64)
            c = 0
            for t in range(3):
                x = RS.g3[t]
                if x >= 0 and x != i and c < 2:
                    others[c] = x
                    c += 1
            consider(RS, best, i, others[0], others[1], P_STEP1)


@njit(cache=True)
def run_pair_cover(S, RS, best):
    """Triples with a redundant member: r plus a light encloser of P minus r already cover P."""
    a = np.empty(4, dtype=np.int64)
    none = np.empty(4, dtype=np.int64)
    none[0] = 1
    none[1] = 0
    none[2] = 1
    none[3] = 0
    q = np.empty(4, dtype=np.int64)
    q[0] = 0
    q[1] = S.K - 1
    q[2] = 0
    q[3] = S.L - 1
    bb = np.empty(4, dtype=np.int64)
    top = np.empty(3, dtype=np.int64)
    for i in range(RS.m):
        a[0] = RS.xl[i]
        a[1] = RS.xh[i]
        a[2] = RS.yl[i]
        a[3] = RS.yh[i]
        if region_bbox(S, q, a, none, bb):
            enc_top3(RS, 1, 0, 1, 0, top)
        else:
            enc_top3(RS, bb[0], bb[1], bb[2], bb[3], top)
        for t in range(3):
            e = top[t]
            if e >= 0 and e != i:
                k = best_third_idx(S, RS, i, e)
                consider(RS, best, i, e, k, P_STEP1)


# --------------------------------------------------------------------------
# Step 1 and Step 2

@njit(cache=True)
def run_step1(S, RS, GS, best, stats):
    ws = np.empty(24, dtype=np.int64)
    for c in range(GS.G):
        a = GS.c1ptr[c]
        b = GS.c1ptr[c + 1]
        for u in range(a, b):
            for v in range(u + 1, b):
                stats[ST_STEP1] += 1
                _pair(S, RS, best, GS.c1rect[u], GS.c1rect[v], P_STEP1, ws)
    for r in range(GS.H):
        a = GS.r1ptr[r]
        b = GS.r1ptr[r + 1]
        for u in range(a, b):
            for v in range(u + 1, b):
                stats[ST_STEP1] += 1
                _pair(S, RS, best, GS.r1rect[u], GS.r1rect[v], P_STEP1, ws)


@njit(cache=True)
def _pair_cell(S, RS, GS, best, stats, i, c, r, seen, ws):
    # pair rectangle i with every rectangle whose edge meets cell (c, r); seen[p] == i marks done pairs
    for u in range(GS.vptr[c], GS.vptr[c + 1]):
        p = GS.vrect[u]
        if GS.vlo[u] <= r and r <= GS.vhi[u] and p != i and seen[p] != i:
            seen[p] = i
            stats[ST_STEP2] += 1
            _pair(S, RS, best, i, p, P_STEP2, ws)
    for u in range(GS.hptr[r], GS.hptr[r + 1]):
        p = GS.hrect[u]
        if GS.hlo[u] <= c and c <= GS.hhi[u] and p != i and seen[p] != i:
            seen[p] = i
            stats[ST_STEP2] += 1
            _pair(S, RS, best, i, p, P_STEP2, ws)


@njit(cache=True)
def run_step2(S, RS, GS, best, stats):
    res = np.empty(2, dtype=np.int64)
    seen = np.full(RS.m, -1, dtype=np.int64)
    ws = np.empty(24, dtype=np.int64)
    for i in range(RS.m):
        r0 = max(GS.ryl[i], 0)
        r1 = min(GS.ryh[i], GS.H - 1)
        c0 = max(GS.cxl[i], 0)
        c1 = min(GS.cxh[i], GS.G - 1)
        for side in range(4):
            if side == 0:
                line = GS.cxl[i]
            elif side == 1:
                line = GS.cxh[i]
            elif side == 2:
                line = GS.ryl[i]
            else:
                line = GS.ryh[i]
            if side < 2:
                if line < 0 or line >= GS.G:
                    continue
                if side == 1 and GS.cxl[i] == line:
                    continue
                gamma_pair(GS, S.n, True, line, r0, r1, RS.yl[i], RS.yh[i], RS.xl[i], RS.xh[i], res)
                for t in range(2):
                    if res[t] >= 0 and not (t == 1 and res[1] == res[0]):
                        _pair_cell(S, RS, GS, best, stats, i, line, res[t], seen, ws)
            else:
                if line < 0 or line >= GS.H:
                    continue
                if side == 3 and GS.ryl[i] == line:
                    continue
                gamma_pair(GS, S.n, False, line, c0, c1, RS.xl[i], RS.xh[i], RS.yl[i], RS.yh[i], res)
                for t in range(2):
                    if res[t] >= 0 and not (t == 1 and res[1] == res[0]):
                        _pair_cell(S, RS, GS, best, stats, i, res[t], line, seen, ws)


# --------------------------------------------------------------------------
# Step 3 configuration evaluation

@njit(cache=True)
def _axis(l0, l1, h0, h1, i):
    if i < l0 or i > h1:
        return OUT
    if (l0 == l1 and l0 == i) or (h0 == h1 and h0 == i):
        return EDGE
    if l1 < i and i < h0:
        return IN
    return MAYBE


@njit(cache=True)
def _status(st, s, i, j):
    a = _axis(st[s, 0, 0], st[s, 0, 1], st[s, 1, 0], st[s, 1, 1], i)
    if a == OUT:
        return OUT
    b = _axis(st[s, 2, 0], st[s, 2, 1], st[s, 3, 0], st[s, 3, 1], j)
    if b == OUT:
        return OUT
    if a == MAYBE or b == MAYBE:
        return MAYBE
    if a == IN and b == IN:
        return IN
    return PARTIAL


@njit(cache=True)
def _maybe_side(st, s, i, j):
    for d in range(4):
        v = i if d < 2 else j
        if st[s, d, 0] < st[s, d, 1] and st[s, d, 0] <= v and v <= st[s, d, 1]:
            return d
    return -1


@njit(cache=True)
def _range_out(st, t, d0, c0, c1):
    """Is slot t outside every cell index in [c0, c1] along axis d0 (0 = columns, 2 = rows)?

    Returns 1 (yes), 0 (no, for every completion of unknown sides) or -(side+2)
    when an unknown side decides it.
    """
    l0 = st[t, d0, 0]
    l1 = st[t, d0, 1]
    h0 = st[t, d0 + 1, 0]
    h1 = st[t, d0 + 1, 1]
    if c1 < l0 or c0 > h1:
        return 1
    if not (c1 < l1 or c0 > h0):
        return 0
    # the answer depends on an unknown side
    if l0 < l1 and c1 >= l0 and c1 < l1:
        return -(d0 + 2)
    return -(d0 + 1 + 2)


@njit(cache=True)
def _others_out_line(st, roles, k, horizontal, fixed, c0, c1):
    """Every slot except k is OUT on the cells of a walk.

    A horizontal walk runs along row ``fixed`` over columns [c0, c1]; a
    vertical walk along column ``fixed`` over rows [c0, c1].  Returns 1 (ok),
    0 (fails) or -(code) naming an unknown side as slot*4+side+1.
    """
    if c0 > c1:
        return 1
    pend = 0
    for t in range(3):
        if t == k or roles[t] < 0:
            continue
        if horizontal:
            fa = _axis(st[t, 2, 0], st[t, 2, 1], st[t, 3, 0], st[t, 3, 1], fixed)
            d0 = 0
        else:
            fa = _axis(st[t, 0, 0], st[t, 0, 1], st[t, 1, 0], st[t, 1, 1], fixed)
            d0 = 2
        if fa == OUT:
            continue
        ro = _range_out(st, t, d0, c0, c1)
        if ro == 1:
            continue
        if fa == MAYBE:
            if pend == 0:
                fd = 2 if horizontal else 0
                if not (st[t, fd, 0] < st[t, fd, 1] and st[t, fd, 0] <= fixed and fixed <= st[t, fd, 1]):
                    fd += 1
                pend = -(t * 4 + fd + 1)
            continue
        if ro == 0:
            return 0
        if pend == 0:
            pend = -(t * 4 + (-ro - 2) + 1)
    return 1 if pend == 0 else pend


@njit(cache=True)
def _walk(st, roles, G, H, i, j, A, B):
    """Owner slot for a type-C cell via the walk rule; -1 on failure, <= -2 asks to branch (code -(slot*4+side+2))."""
    pend = 0
    for k in (A, B):
        # horizontal edge of k in row j
        if (st[k, 2, 0] == st[k, 2, 1] and st[k, 2, 0] == j) or (st[k, 3, 0] == st[k, 3, 1] and st[k, 3, 0] == j):
            if st[k, 0, 0] != st[k, 0, 1]:
                if pend == 0:
                    pend = k * 4 + 0 + 1
            else:
                left = max(st[k, 0, 0], 0)
                r = _others_out_line(st, roles, k, True, j, left, i - 1)
                if r == 1:
                    return k
                if r < 0 and pend == 0:
                    pend = -r
            if st[k, 1, 0] != st[k, 1, 1]:
                if pend == 0:
                    pend = k * 4 + 1 + 1
            else:
                right = min(st[k, 1, 0], G - 1)
                r = _others_out_line(st, roles, k, True, j, i + 1, right)
                if r == 1:
                    return k
                if r < 0 and pend == 0:
                    pend = -r
        # vertical edge of k in column i
        if (st[k, 0, 0] == st[k, 0, 1] and st[k, 0, 0] == i) or (st[k, 1, 0] == st[k, 1, 1] and st[k, 1, 0] == i):
            if st[k, 2, 0] != st[k, 2, 1]:
                if pend == 0:
                    pend = k * 4 + 2 + 1
            else:
                low = max(st[k, 2, 0], 0)
                r = _others_out_line(st, roles, k, False, i, low, j - 1)
                if r == 1:
                    return k
                if r < 0 and pend == 0:
                    pend = -r
            if st[k, 3, 0] != st[k, 3, 1]:
                if pend == 0:
                    pend = k * 4 + 3 + 1
            else:
                high = min(st[k, 3, 0], H - 1)
                r = _others_out_line(st, roles, k, False, i, j + 1, high)
                if r == 1:
                    return k
                if r < 0 and pend == 0:
                    pend = -r
    if pend != 0:
        return -(pend + 1)
    return -1


@njit(cache=True)
def _breaks(st, roles, d0, size, out):
    n = 0
    out[n] = 0
    n += 1
    out[n] = size
    n += 1
    for s in range(3):
        if roles[s] < 0:
            continue
        for d in (d0, d0 + 1):
            for v in (st[s, d, 0], st[s, d, 1] + 1):
                if 0 < v and v < size:
                    out[n] = v
                    n += 1
    srt = np.sort(out[:n])
    m = 0
    for t in range(n):
        if m == 0 or srt[t] != out[m - 1]:
            out[m] = srt[t]
            m += 1
    return m


@njit(cache=True)
def _merge(bb, has, s, box):
    if has[s] == 0:
        bb[s, 0] = box[0]
        bb[s, 1] = box[1]
        bb[s, 2] = box[2]
        bb[s, 3] = box[3]
        has[s] = 1
    else:
        bb[s, 0] = min(bb[s, 0], box[0])
        bb[s, 1] = max(bb[s, 1], box[1])
        bb[s, 2] = min(bb[s, 2], box[2])
        bb[s, 3] = max(bb[s, 3], box[3])


@njit(cache=True)
def eval_config(GS, st, roles, bb, has, stats):
    """Assign occupied grid blocks to slots.

    Returns 0 when done (bb/has hold the boxes of the ENCLOSE slots), -1 to
    prune, or slot*4+side+1 to branch on an unknown side.
    """
    G = GS.G
    H = GS.H
    xb = np.empty(16, dtype=np.int64)
    yb = np.empty(16, dtype=np.int64)
    nx = _breaks(st, roles, 0, G, xb)
    ny = _breaks(st, roles, 2, H, yb)
    box = np.empty(4, dtype=np.int64)
    stat = np.empty(3, dtype=np.int64)
    for s in range(3):
        has[s] = 0
    for u in range(nx - 1):
        i0 = xb[u]
        i1 = xb[u + 1] - 1
        for v in range(ny - 1):
            j0 = yb[v]
            j1 = yb[v + 1] - 1
            if cell_block(GS, i0, i1, j0, j1, box):
                continue
            enc_in = -1
            third_in = False
            nz = 0
            nz_enc = 0
            mb = -1
            a = -1
            b = -1
            for s in range(3):
                if roles[s] < 0:
                    stat[s] = OUT
                    continue
                stat[s] = _status(st, s, i0, j0)
                if stat[s] == IN:
                    if roles[s] == ENCLOSE:
                        if enc_in < 0:
                            enc_in = s
                    else:
                        third_in = True
                if stat[s] != OUT:
                    nz += 1
                    if roles[s] == ENCLOSE:
                        nz_enc += 1
                    if stat[s] == MAYBE and mb < 0:
                        mb = s
                    if a < 0:
                        a = s
                    else:
                        b = s
            if enc_in >= 0:
                _merge(bb, has, enc_in, box)
                continue
            if third_in:
                continue
            if nz == 0:
                return -1
            if nz_enc == 0:
                continue  # only the third rectangle can cover these points
            if mb >= 0:
                return mb * 4 + _maybe_side(st, mb, i0, j0) + 1
            if nz == 1:
                owner = a
            elif nz == 2 and i0 == i1 and j0 == j1:
                owner = _walk(st, roles, G, H, i0, j0, a, b)
                if owner <= -2:
                    return -owner - 1
                if owner < 0:
                    stats[ST_WALKFAIL] += 1
                    return -1
            else:
                stats[ST_WALKFAIL] += 1
                return -1
            if roles[owner] == ENCLOSE:
                _merge(bb, has, owner, box)
    return 0


@njit(cache=True)
def _finish_config(S, RS, roles, bb, has, best, prov):
    tops = np.full((3, 3), -1, dtype=np.int64)
    third = -1
    for s in range(3):
        if roles[s] == ENCLOSE:
            if has[s]:
                c = enc_top3(RS, bb[s, 0], bb[s, 1], bb[s, 2], bb[s, 3], tops[s])
            else:
                c = enc_top3(RS, 1, 0, 1, 0, tops[s])
            if c == 0:
                return
        elif roles[s] == THIRD:
            third = s
    if third < 0:
        for x in range(3):
            for y in range(3):
                for z in range(3):
                    consider(RS, best, tops[0, x], tops[1, y], tops[2, z], prov)
    else:
        e0 = -1
        e1 = -1
        for s in range(3):
            if roles[s] == ENCLOSE:
                if e0 < 0:
                    e0 = s
                else:
                    e1 = s
        for x in range(3):
            for y in range(3):
                a = tops[e0, x]
                b = tops[e1, y]
                if a < 0 or b < 0 or a == b:
                    continue
                k = best_third_idx(S, RS, a, b)
                consider(RS, best, a, b, k, prov)


@njit(cache=True)
def _valid_single(st, s, d, v, G, H):
    # a newly fixed side must respect side order and the distinct-column/row rule
    if d == 0 and v > st[s, 1, 1]:
        return False
    if d == 1 and v < st[s, 0, 0]:
        return False
    if d == 2 and v > st[s, 3, 1]:
        return False
    if d == 3 and v < st[s, 2, 0]:
        return False
    size = G if d < 2 else H
    if v < 0 or v >= size:
        return True
    base = 0 if d < 2 else 2
    for t in range(3):
        if t == s:
            continue
        for e in (base, base + 1):
            if st[t, e, 0] == st[t, e, 1] and st[t, e, 0] == v:
                return False
    return True


@njit(cache=True)
def solve_config(S, RS, GS, st0, roles, best, stats, prov, stack, bb, has):
    """Evaluate one configuration, branching on unknown sides by halving their ranges."""
    cap = stack.shape[0]
    stack[0] = st0
    sp = 1
    st = np.empty((3, 4, 2), dtype=np.int64)
    while sp > 0:
        sp -= 1
        st[:] = stack[sp]
        code = eval_config(GS, st, roles, bb, has, stats)
        if code == 0:
            _finish_config(S, RS, roles, bb, has, best, prov)
            continue
        if code < 0:
            stats[ST_PRUNE] += 1
            continue
        s = (code - 1) // 4
        d = (code - 1) % 4
        lo = st[s, d, 0]
        hi = st[s, d, 1]
        mid = (lo + hi) // 2
        stats[ST_BRANCH] += 1
        for part in range(2):
            a = lo if part == 0 else mid + 1
            b = mid if part == 0 else hi
            if a > b:
                continue
            if a == b and not _valid_single(st, s, d, a, GS.G, GS.H):
                continue
            if sp >= cap:
                stats[ST_PRUNE] += 1
                continue
            stack[sp] = st
            stack[sp, s, d, 0] = a
            stack[sp, s, d, 1] = b
            sp += 1


@njit(cache=True)
def _distinct_ok(sig_a, sig_b, G, H):
    for d in (0, 1):
        v = sig_a[d]
        if 0 <= v and v < G and (v == sig_b[0] or v == sig_b[1]):
            return False
    for d in (2, 3):
        v = sig_a[d]
        if 0 <= v and v < H and (v == sig_b[2] or v == sig_b[3]):
            return False
    return True


@njit(cache=True)
def _set_slot(st, s, sig, hidden, G, H):
    for d in range(4):
        st[s, d, 0] = sig[d]
        st[s, d, 1] = sig[d]
    if hidden >= 0:
        if hidden == 0:
            st[s, 0, 0] = 0
            st[s, 0, 1] = min(sig[1], G - 1)
        elif hidden == 1:
            st[s, 1, 0] = max(sig[0], 0)
            st[s, 1, 1] = G - 1
        elif hidden == 2:
            st[s, 2, 0] = 0
            st[s, 2, 1] = min(sig[3], H - 1)
        else:
            st[s, 3, 0] = max(sig[2], 0)
            st[s, 3, 1] = H - 1


@njit(cache=True)
def run_step3(S, RS, GS, sigs, gptr, psigs, pptr, triples, best, stats, prov):
    """Enumerate configurations: rows of triples are (pA, pB, pC, hidden).

    Full signatures are grouped by pattern (gptr over 16 patterns); partial
    signatures of the third slot by pattern*4+hidden (pptr).  hidden = -1 means
    three ENCLOSE slots; otherwise slot 2 is a THIRD slot with that side unknown.
    """
    G = GS.G
    H = GS.H
    st = np.empty((3, 4, 2), dtype=np.int64)
    roles = np.zeros(3, dtype=np.int64)
    stack = np.empty((4096, 3, 4, 2), dtype=np.int64)
    bb = np.empty((3, 4), dtype=np.int64)
    has = np.zeros(3, dtype=np.int64)
    for t in range(triples.shape[0]):
        pa = triples[t, 0]
        pb = triples[t, 1]
        pc = triples[t, 2]
        hid = triples[t, 3]
        roles[0] = ENCLOSE
        roles[1] = ENCLOSE
        roles[2] = ENCLOSE if hid < 0 else THIRD
        for a in range(gptr[pa], gptr[pa + 1]):
            b0 = gptr[pb]
            if pb == pa:
                b0 = a + 1
            for b in range(b0, gptr[pb + 1]):
                if not _distinct_ok(sigs[a], sigs[b], G, H):
                    continue
                if hid < 0:
                    c0 = gptr[pc]
                    c1 = gptr[pc + 1]
                    if pc == pb:
                        c0 = b + 1
                else:
                    c0 = pptr[pc * 4 + hid]
                    c1 = pptr[pc * 4 + hid + 1]
                for c in range(c0, c1):
                    sc = sigs[c] if hid < 0 else psigs[c]
                    if not _distinct_ok(sigs[a], sc, G, H) or not _distinct_ok(sigs[b], sc, G, H):
                        continue
                    stats[ST_CFG] += 1
                    _set_slot(st, 0, sigs[a], -1, G, H)
                    _set_slot(st, 1, sigs[b], -1, G, H)
                    _set_slot(st, 2, sc, hid, G, H)
                    solve_config(S, RS, GS, st, roles, best, stats, prov, stack, bb, has)


# --------------------------------------------------------------------------
# Case I: a rectangle plus a separating grid line

@njit(cache=True)
def run_case1(S, RS, GS, best, stats):
    a = np.empty(4, dtype=np.int64)
    none = np.empty(4, dtype=np.int64)
    none[0] = 1
    none[1] = 0
    none[2] = 1
    none[3] = 0
    q = np.empty(4, dtype=np.int64)
    boxes = np.empty((25, 4), dtype=np.int64)
    tmp = np.empty(4, dtype=np.int64)
    bb = np.empty(4, dtype=np.int64)
    top = np.empty(3, dtype=np.int64)
    for i in range(RS.m):
        a[0] = RS.xl[i]
        a[1] = RS.xh[i]
        a[2] = RS.yl[i]
        a[3] = RS.yh[i]
        for direction in range(2):
            lines = GS.G if direction == 0 else GS.H
            starts = GS.colstart if direction == 0 else GS.rowstart
            empty = True
            for t in range(1, lines):
                # add strip t-1 minus rectangle i
                if direction == 0:
                    q[0] = starts[t - 1]
                    q[1] = starts[t] - 1
                    q[2] = 0
                    q[3] = S.L - 1
                else:
                    q[0] = 0
                    q[1] = S.K - 1
                    q[2] = starts[t - 1]
                    q[3] = starts[t] - 1
                nb = _decompose(S, q, a, none, boxes)
                for u in range(nb):
                    if not ps_box_extremes(S, boxes[u, 0], boxes[u, 1], boxes[u, 2], boxes[u, 3], tmp):
                        if empty:
                            bb[:] = tmp
                            empty = False
                        else:
                            bb[0] = min(bb[0], tmp[0])
                            bb[1] = max(bb[1], tmp[1])
                            bb[2] = min(bb[2], tmp[2])
                            bb[3] = max(bb[3], tmp[3])
                stats[ST_CASE1] += 1
                if empty:
                    enc_top3(RS, 1, 0, 1, 0, top)
                else:
                    enc_top3(RS, bb[0], bb[1], bb[2], bb[3], top)
                r2 = first_not(top, i, -1)
                if r2 < 0:
                    break  # the region only grows with t
                k = best_third_idx(S, RS, i, r2)
                consider(RS, best, i, r2, k, P_CASE_I)


# --------------------------------------------------------------------------
# unit squares, Case II: staircase, hat region of the middle square

@njit(cache=True)
def run_unit_case2(S, RS, best, stats):
    a = np.empty(4, dtype=np.int64)
    none = np.empty(4, dtype=np.int64)
    none[0] = 1
    none[1] = 0
    none[2] = 1
    none[3] = 0
    q = np.empty(4, dtype=np.int64)
    bb = np.empty(4, dtype=np.int64)
    top = np.empty(3, dtype=np.int64)
    for i in range(RS.m):
        a[0] = RS.xl[i]
        a[1] = RS.xh[i]
        a[2] = RS.yl[i]
        a[3] = RS.yh[i]
        for orient in range(2):
            q[0] = 0
            q[1] = min(RS.xh[i], S.K - 1)
            if orient == 0:
                q[2] = 0
                q[3] = min(RS.yh[i], S.L - 1)
            else:
                q[2] = max(RS.yl[i], 0)
                q[3] = S.L - 1
            stats[ST_CASE2] += 1
            if region_bbox(S, q, a, none, bb):
                enc_top3(RS, 1, 0, 1, 0, top)
            else:
                enc_top3(RS, bb[0], bb[1], bb[2], bb[3], top)
            r1 = first_not(top, i, -1)
            if r1 < 0:
                continue
            k = best_third_idx(S, RS, r1, i)
            consider(RS, best, r1, i, k, P_UNIT_II)


# --------------------------------------------------------------------------
# unit squares, Case III: closed-form cell partition per orientation

@njit(cache=True)
def _msig(GS, t, fx, fy):
    G = GS.G
    H = GS.H
    if fx:
        xl = G - 1 - GS.cxh[t]
        xh = G - 1 - GS.cxl[t]
    else:
        xl = GS.cxl[t]
        xh = GS.cxh[t]
    if fy:
        yl = H - 1 - GS.ryh[t]
        yh = H - 1 - GS.ryl[t]
    else:
        yl = GS.ryl[t]
        yh = GS.ryh[t]
    return xl, xh, yl, yh


@njit(cache=True)
def _uniq_pairs(keys, n, mul):
    k = np.unique(keys[:n])
    out = np.empty((k.shape[0], 2), dtype=np.int64)
    for t in range(k.shape[0]):
        out[t, 0] = k[t] // mul - 1
        out[t, 1] = k[t] % mul - 1
    return out


@njit(cache=True)
def _piece(GS, fx, fy, i0, i1, j0, j1, bb, has, s):
    # mirrored cell range -> original cells -> merge its bbox into slot s
    G = GS.G
    H = GS.H
    if i0 < 0:
        i0 = 0
    if j0 < 0:
        j0 = 0
    if i1 > G - 1:
        i1 = G - 1
    if j1 > H - 1:
        j1 = H - 1
    if i0 > i1 or j0 > j1:
        return
    if fx:
        i0, i1 = G - 1 - i1, G - 1 - i0
    if fy:
        j0, j1 = H - 1 - j1, H - 1 - j0
    box = np.empty(4, dtype=np.int64)
    if not cell_block(GS, i0, i1, j0, j1, box):
        _merge(bb, has, s, box)


@njit(cache=True)
def _has_encloser(RS, bb, has, s, top):
    if has[s] == 0:
        return True
    return enc_top3(RS, bb[s, 0], bb[s, 1], bb[s, 2], bb[s, 3], top) > 0


@njit(cache=True)
def run_unit_case3(S, RS, GS, best, stats):
    G = GS.G
    H = GS.H
    m = RS.m
    k1 = np.empty(max(m, 1), dtype=np.int64)
    k2 = np.empty(max(m, 1), dtype=np.int64)
    k3 = np.empty(max(m, 1), dtype=np.int64)
    bb = np.empty((3, 4), dtype=np.int64)
    has = np.zeros(3, dtype=np.int64)
    sb = np.empty((3, 4), dtype=np.int64)
    sh = np.zeros(3, dtype=np.int64)
    top = np.empty(3, dtype=np.int64)
    tops = np.full((3, 3), -1, dtype=np.int64)
    mulx = G + 3
    muly = H + 3
    for fx in range(2):
        for fy in range(2):
            n1 = 0
            n2 = 0
            n3 = 0
            for t in range(m):
                xl, xh, yl, yh = _msig(GS, t, fx, fy)
                if xl == -1 and yl == -1:
                    k1[n1] = (xh + 1) * muly + (yh + 1)
                    n1 += 1
                if yh == H:
                    k2[n2] = (xl + 1) * mulx + (xh + 1)
                    n2 += 1
                if xh == G:
                    k3[n3] = (yl + 1) * muly + (yh + 1)
                    n3 += 1
            S1 = _uniq_pairs(k1, n1, muly)
            S2 = _uniq_pairs(k2, n2, mulx)
            S3 = _uniq_pairs(k3, n3, muly)
            for u in range(S1.shape[0]):
                a = S1[u, 0]
                b = S1[u, 1]
                for s in range(3):
                    has[s] = 0
                # rho1 core
                _piece(GS, fx, fy, 0, a - 1, 0, b - 1, bb, has, 0)
                if not _has_encloser(RS, bb, has, 0, top):
                    continue
                sb[:] = bb
                sh[:] = has
                for v in range(S2.shape[0]):
                    c = S2[v, 0]
                    d = S2[v, 1]
                    if not (c < a and (a < d or (a == G and d == G))):
                        continue
                    bb[:] = sb
                    has[:] = sh
                    if b < H:
                        _piece(GS, fx, fy, 0, c, b, b, bb, has, 0)
                        _piece(GS, fx, fy, c + 1, a - 1, b, b, bb, has, 1)
                    _piece(GS, fx, fy, 0, d - 1, b + 1, H - 1, bb, has, 1)
                    if not _has_encloser(RS, bb, has, 0, top) or not _has_encloser(RS, bb, has, 1, top):
                        continue
                    vb = bb.copy()
                    vh = has.copy()
                    for w_ in range(S3.shape[0]):
                        e = S3[w_, 0]
                        f = S3[w_, 1]
                        if not (e < b and (b < f or (b == H and f == H))):
                            continue
                        stats[ST_CASE3] += 1
                        bb[:] = vb
                        has[:] = vh
                        if a < G:
                            _piece(GS, fx, fy, a, a, 0, e, bb, has, 0)
                            _piece(GS, fx, fy, a, a, e + 1, b, bb, has, 2)
                        if d < G:
                            _piece(GS, fx, fy, d, d, f + 1, H - 1, bb, has, 1)
                            _piece(GS, fx, fy, d, d, b + 1, f, bb, has, 2)
                        _piece(GS, fx, fy, a + 1, G - 1, 0, b, bb, has, 2)
                        _piece(GS, fx, fy, d + 1, G - 1, b + 1, H - 1, bb, has, 2)
                        ok = True
                        for s in range(3):
                            if has[s]:
                                c_ = enc_top3(RS, bb[s, 0], bb[s, 1], bb[s, 2], bb[s, 3], tops[s])
                            else:
                                c_ = enc_top3(RS, 1, 0, 1, 0, tops[s])
                            if c_ == 0:
                                ok = False
                                break
                        if not ok:
                            continue
                        for x in range(3):
                            for y in range(3):
                                for z in range(3):
                                    consider(RS, best, tops[0, x], tops[1, y], tops[2, z], P_UNIT_III)


# --------------------------------------------------------------------------
# weighted rectangles, Case III (best effort): r2 identity plus a two-sided r1 signature

@njit(cache=True)
def run_rect_case3(S, RS, GS, sigs2, best, stats):
    a = np.empty(4, dtype=np.int64)
    none = np.empty(4, dtype=np.int64)
    none[0] = 1
    none[1] = 0
    none[2] = 1
    none[3] = 0
    q = np.empty(4, dtype=np.int64)
    bb = np.empty(4, dtype=np.int64)
    top = np.empty(3, dtype=np.int64)
    G = GS.G
    H = GS.H
    for i in range(RS.m):
        a[0] = RS.xl[i]
        a[1] = RS.xh[i]
        a[2] = RS.yl[i]
        a[3] = RS.yh[i]
        for u in range(sigs2.shape[0]):
            # cells strictly inside the guessed r1
            c0 = sigs2[u, 0] + 1
            c1 = sigs2[u, 1] - 1
            r0 = sigs2[u, 2] + 1
            r1 = sigs2[u, 3] - 1
            if c0 > c1 or r0 > r1:
                continue
            q[0] = GS.colstart[max(c0, 0)]
            q[1] = GS.colstart[min(c1, G - 1) + 1] - 1
            q[2] = GS.rowstart[max(r0, 0)]
            q[3] = GS.rowstart[min(r1, H - 1) + 1] - 1
            stats[ST_CASE3] += 1
            if region_bbox(S, q, a, none, bb):
                continue
            enc_top3(RS, bb[0], bb[1], bb[2], bb[3], top)
            for t in range(3):
                r = top[t]
                if r < 0 or r == i:
                    continue
                k = best_third_idx(S, RS, r, i)
                consider(RS, best, r, i, k, P_CASE_III)
