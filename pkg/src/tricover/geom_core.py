"""Exact scalars, points and boxes with extended and open endpoints.

Coordinates are ``fractions.Fraction``.  An extended scalar is either a
Fraction or one of ``NEG_INF`` / ``POS_INF`` (the float infinities, which
compare exactly against Fractions).  Points are plain tuples of Fractions.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, Union

Rational = Fraction
ExtScalar = Union[Fraction, float]
Point = tuple

NEG_INF = -math.inf
POS_INF = math.inf


class DimensionError(ValueError):
    """Operands of mismatched dimension."""


class OpenSideError(ValueError):
    """A solver that needs closed rectangles received an open side."""


def rational(x: Any) -> Fraction:
    """Convert int / Fraction / decimal or ``a/b`` string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError("infinite value where a finite rational is required")
        # floats are accepted only when they are exactly representable decimals
        # typed by a human, e.g. 0.5 or 2.25
        return Fraction(repr(x))
    raise TypeError(f"cannot make a rational from {type(x).__name__}")


def ext(x: Any) -> ExtScalar:
    """Convert to an extended scalar; accepts the infinities and 'inf' strings."""
    if isinstance(x, float) and math.isinf(x):
        return x
    if isinstance(x, str) and x.strip().lstrip("+-").lower() in ("inf", "infinity"):
        return NEG_INF if x.strip().startswith("-") else POS_INF
    return rational(x)


def is_finite(x: ExtScalar) -> bool:
    return not (isinstance(x, float) and math.isinf(x))


def point(*coords: Any) -> Point:
    if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
        coords = tuple(coords[0])
    return tuple(rational(c) for c in coords)


@dataclass(frozen=True)
class Interval:
    lo: ExtScalar
    hi: ExtScalar
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo, hi = ext(self.lo), ext(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        # an infinite endpoint is never attained
        if not is_finite(lo):
            if lo != NEG_INF:
                raise ValueError("lower endpoint cannot be +inf")
            object.__setattr__(self, "lo_closed", False)
        if not is_finite(hi):
            if hi != POS_INF:
                raise ValueError("upper endpoint cannot be -inf")
            object.__setattr__(self, "hi_closed", False)
        if lo > hi or (lo == hi and not (self.lo_closed and self.hi_closed)):
            raise ValueError(f"empty interval {self}")

    def contains(self, v: Fraction) -> bool:
        if v < self.lo or (v == self.lo and not self.lo_closed):
            return False
        if v > self.hi or (v == self.hi and not self.hi_closed):
            return False
        return True

    def includes(self, other: "Interval") -> bool:
        if other.lo < self.lo:
            return False
        if other.lo == self.lo and other.lo_closed and not self.lo_closed:
            return False
        if other.hi > self.hi:
            return False
        if other.hi == self.hi and other.hi_closed and not self.hi_closed:
            return False
        return True

    @property
    def closed(self) -> bool:
        """True when every finite endpoint is attained."""
        return (self.lo_closed or not is_finite(self.lo)) and (
            self.hi_closed or not is_finite(self.hi))

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"


def closed_interval(lo: Any, hi: Any) -> Interval:
    return Interval(lo, hi, True, True)


REAL_LINE = Interval(NEG_INF, POS_INF, False, False)


@dataclass(frozen=True)
class ExtRect:
    """Axis-aligned box: one Interval per dimension, optional weight and id."""
    sides: tuple
    weight: Optional[Fraction] = None
    id: Any = None

    def __post_init__(self):
        sides = tuple(s if isinstance(s, Interval) else Interval(*s) for s in self.sides)
        if not sides:
            raise DimensionError("a box needs at least one dimension")
        object.__setattr__(self, "sides", sides)
        if self.weight is not None:
            object.__setattr__(self, "weight", rational(self.weight))

    @classmethod
    def closed(cls, lo: Sequence, hi: Sequence, weight: Any = None, id: Any = None) -> "ExtRect":
        if len(lo) != len(hi):
            raise DimensionError("lo/hi length mismatch")
        return cls(tuple(Interval(a, b) for a, b in zip(lo, hi)), weight, id)

    @property
    def dim(self) -> int:
        return len(self.sides)

    @property
    def is_closed(self) -> bool:
        return all(s.closed for s in self.sides)

    @property
    def lo(self) -> tuple:
        return tuple(s.lo for s in self.sides)

    @property
    def hi(self) -> tuple:
        return tuple(s.hi for s in self.sides)

    def with_sides(self, sides: Iterable[Interval]) -> "ExtRect":
        return ExtRect(tuple(sides), self.weight, self.id)

    def __str__(self) -> str:
        body = " x ".join(str(s) for s in self.sides)
        w = "" if self.weight is None else f" w={self.weight}"
        return f"R[{self.id}]{body}{w}"


@dataclass(frozen=True)
class BBox:
    """Closed finite planar box [xlo, xhi] x [ylo, yhi]."""
    xlo: Fraction
    xhi: Fraction
    ylo: Fraction
    yhi: Fraction

    def as_rect(self, id: Any = None) -> ExtRect:
        return ExtRect.closed((self.xlo, self.ylo), (self.xhi, self.yhi), id=id)

    @classmethod
    def of_points(cls, pts: Sequence[Point]) -> Optional["BBox"]:
        if not pts:
            return None
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return cls(min(xs), max(xs), min(ys), max(ys))


def _fmt(v: ExtScalar) -> str:
    if not is_finite(v):
        return "-inf" if v < 0 else "inf"
    return str(v)


def point_in_rect(p: Point, r: ExtRect) -> bool:
    if len(p) != r.dim:
        raise DimensionError(f"point of dim {len(p)} vs box of dim {r.dim}")
    return all(s.contains(c) for c, s in zip(p, r.sides))


def covers_all(rects: Sequence[ExtRect], points: Sequence[Point]) -> bool:
    rects = list(rects)
    dims = {r.dim for r in rects} | {len(p) for p in points}
    if len(dims) > 1:
        raise DimensionError(f"mixed dimensions {sorted(dims)}")
    return all(any(point_in_rect(p, r) for r in rects) for p in points)


def rect_encloses(outer: ExtRect, inner: ExtRect) -> bool:
    if outer.dim != inner.dim:
        raise DimensionError(f"box of dim {outer.dim} vs box of dim {inner.dim}")
    return all(o.includes(i) for o, i in zip(outer.sides, inner.sides))


def check_dims(points: Sequence[Point], rects: Sequence[ExtRect], d: Optional[int] = None) -> int:
    """Return the common dimension or raise DimensionError."""
    dims = {len(p) for p in points} | {r.dim for r in rects}
    if d is not None:
        dims.add(d)
    if len(dims) > 1:
        raise DimensionError(f"mixed dimensions {sorted(dims)}")
    return dims.pop() if dims else (d or 2)


def bounding_box(points: Sequence[Point]) -> Optional[BBox]:
    return BBox.of_points(points)


def total_weight(rects: Iterable[ExtRect]) -> Fraction:
    return sum((r.weight if r.weight is not None else Fraction(1) for r in rects), Fraction(0))


__all__ = [
    "Rational", "ExtScalar", "Point", "NEG_INF", "POS_INF", "DimensionError", "OpenSideError",
    "rational", "ext", "is_finite", "point", "Interval", "closed_interval", "REAL_LINE",
    "ExtRect", "BBox", "point_in_rect", "covers_all", "rect_encloses", "check_dims",
    "bounding_box", "total_weight",
]
