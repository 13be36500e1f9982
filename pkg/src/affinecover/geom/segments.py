"""Exact segment classification over rational points.

Rational inputs are rescaled to integers (classification is invariant
under uniform scaling) and dispatched to the fast kernel when they fit
the 64-bit guard, else to the bigint path.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from math import lcm

from ..errors import DegenerateInputError
from ..kernels import MAX_FAST_COORD, impl, pure
from .primitives import Point2


class SegRelation(IntEnum):
    DISJOINT = 0
    SHARED_ENDPOINT = 1
    PROPER_CROSSING = 2
    ENDPOINT_IN_INTERIOR = 3
    COLLINEAR_OVERLAP = 4

    @property
    def is_violation(self) -> bool:
        return self >= SegRelation.PROPER_CROSSING


def _scaled_ints(points):
    scale = lcm(*(c.denominator for p in points for c in p))
    return [int(c * scale) for p in points for c in p]


def classify_segments(p: Point2, q: Point2, r: Point2, s: Point2) -> SegRelation:
    """Relation between segments pq and rs."""
    if p == q or r == s:
        raise DegenerateInputError("zero-length segment")
    coords = _scaled_ints([p, q, r, s])
    if max(abs(c) for c in coords) < MAX_FAST_COORD:
        return SegRelation(impl.seg_classify(*coords))
    return SegRelation(pure.seg_classify(*coords))


def point_in_open_segment(p: Point2, a: Point2, b: Point2) -> bool:
    """True if p lies strictly between a and b."""
    if a == b:
        raise DegenerateInputError("zero-length segment")
    coords = _scaled_ints([p, a, b])
    if max(abs(c) for c in coords) < MAX_FAST_COORD:
        return impl.point_on_segment(*coords) == 2
    return pure.point_on_segment(*coords) == 2


def orient(a: Point2, b: Point2, c: Point2) -> int:
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (v > 0) - (v < 0)
