import itertools
from fractions import Fraction as F

import pytest
from hypothesis import strategies as st

from tricover.geom_core import ExtRect

small = st.integers(-6, 6).map(F)
pts2 = st.tuples(small, small)


@st.composite
def rects2(draw, weighted=True, max_size=8):
    n = draw(st.integers(0, max_size))
    out = []
    for k in range(n):
        a, b = sorted(draw(st.lists(st.integers(-7, 7), min_size=2, max_size=2)))
        c, d = sorted(draw(st.lists(st.integers(-7, 7), min_size=2, max_size=2)))
        w = draw(st.integers(1, 9)) if weighted else None
        out.append(ExtRect.closed((a, c), (b, d), weight=w, id=k))
    return out


def scan_cover3(P, R, weighted=True):
    """Plain triple enumeration, independent of the package oracles."""
    best = None
    for t in itertools.combinations(R, 3):
        if all(any(r.sides[0].contains(p[0]) and r.sides[1].contains(p[1]) for r in t) for p in P):
            w = sum((r.weight if (weighted and r.weight is not None) else 1) for r in t)
            if best is None or w < best:
                best = w
    return best


@pytest.fixture
def tiny_rects():
    return [ExtRect.closed((0, 0), (2, 2), weight=3, id=0),
            ExtRect.closed((3, 0), (5, 2), weight=4, id=1),
            ExtRect.closed((6, 0), (8, 2), weight=5, id=2),
            ExtRect.closed((0, 0), (8, 2), weight=20, id=3)]
