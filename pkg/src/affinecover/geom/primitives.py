"""Exact rational primitives: points, lines, planes, affine maps.

Lines and planes are kept in a normalized form (first nonzero leading
coefficient equal to 1) so equal objects compare and hash equal and the
lexicographic order on coefficient tuples is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from ..errors import DegenerateInputError

Rat = Fraction


class Point2(NamedTuple):
    x: Fraction
    y: Fraction


class Point3(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction


def pt2(x, y) -> Point2:
    return Point2(Fraction(x), Fraction(y))


def pt3(x, y, z) -> Point3:
    return Point3(Fraction(x), Fraction(y), Fraction(z))


@dataclass(frozen=True, order=True)
class Line2:
    """Line a*x + b*y = c with the first nonzero of (a, b) scaled to 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a != 0:
            s = a
        elif b != 0:
            s = b
        else:
            raise DegenerateInputError("line with zero normal vector")
        object.__setattr__(self, "a", a / s)
        object.__setattr__(self, "b", b / s)
        object.__setattr__(self, "c", c / s)

    @classmethod
    def through(cls, p: Point2, q: Point2) -> "Line2":
        if p == q:
            raise DegenerateInputError("two coincident points span no line")
        a = q.y - p.y
        b = p.x - q.x
        return cls(a, b, a * p.x + b * p.y)

    @classmethod
    def horizontal(cls, y) -> "Line2":
        return cls(Fraction(0), Fraction(1), Fraction(y))

    def contains(self, p: Point2) -> bool:
        return self.a * p.x + self.b * p.y == self.c

    def value(self, p: Point2) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def direction(self) -> Point2:
        return Point2(-self.b, self.a)

    def base_point(self) -> Point2:
        if self.b != 0:
            return Point2(Fraction(0), self.c / self.b)
        return Point2(self.c / self.a, Fraction(0))


X_AXIS = Line2(Fraction(0), Fraction(1), Fraction(0))
Y_AXIS = Line2(Fraction(1), Fraction(0), Fraction(0))


@dataclass(frozen=True, order=True)
class Plane3:
    """Plane a*x + b*y + c*z = d, first nonzero of (a, b, c) scaled to 1."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        a, b, c, d = (Fraction(self.a), Fraction(self.b),
                      Fraction(self.c), Fraction(self.d))
        for s in (a, b, c):
            if s != 0:
                break
        else:
            raise DegenerateInputError("plane with zero normal vector")
        object.__setattr__(self, "a", a / s)
        object.__setattr__(self, "b", b / s)
        object.__setattr__(self, "c", c / s)
        object.__setattr__(self, "d", d / s)

    def normal(self) -> Point3:
        return Point3(self.a, self.b, self.c)

    def contains(self, p: Point3) -> bool:
        return self.a * p.x + self.b * p.y + self.c * p.z == self.d


PLANE_Z0 = Plane3(0, 0, 1, 0)
PLANE_Y0 = Plane3(0, 1, 0, 0)


def cross3(u: Point3, v: Point3) -> Point3:
    return Point3(u.y * v.z - u.z * v.y,
                  u.z * v.x - u.x * v.z,
                  u.x * v.y - u.y * v.x)


def dot3(u: Point3, v: Point3) -> Fraction:
    return u.x * v.x + u.y * v.y + u.z * v.z


def plane_intersection(p: Plane3, q: Plane3) -> tuple[Point3, Point3]:
    """Point and direction of the line shared by two non-parallel planes."""
    d = cross3(p.normal(), q.normal())
    if d == Point3(0, 0, 0):
        raise DegenerateInputError("parallel planes share no spine line")
    # Zero out the coordinate matching the largest direction component and
    # solve the remaining exact 2x2 system.
    cols = [(abs(d.x), 0), (abs(d.y), 1), (abs(d.z), 2)]
    _, drop = max(cols)
    idx = [i for i in range(3) if i != drop]
    n1 = [p.a, p.b, p.c]
    n2 = [q.a, q.b, q.c]
    a11, a12 = n1[idx[0]], n1[idx[1]]
    a21, a22 = n2[idx[0]], n2[idx[1]]
    det = a11 * a22 - a12 * a21
    x1 = (p.d * a22 - a12 * q.d) / det
    x2 = (a11 * q.d - p.d * a21) / det
    coords = [Fraction(0)] * 3
    coords[idx[0]] = x1
    coords[idx[1]] = x2
    return Point3(*coords), d


@dataclass(frozen=True)
class Affine2:
    """Invertible rational affine map x -> M x + t of the plane."""

    m00: Fraction
    m01: Fraction
    m10: Fraction
    m11: Fraction
    t0: Fraction
    t1: Fraction

    def __post_init__(self):
        vals = [Fraction(getattr(self, f)) for f in
                ("m00", "m01", "m10", "m11", "t0", "t1")]
        for f, v in zip(("m00", "m01", "m10", "m11", "t0", "t1"), vals):
            object.__setattr__(self, f, v)
        if self.m00 * self.m11 - self.m01 * self.m10 == 0:
            raise DegenerateInputError("affine map is singular")

    def apply(self, p: Point2) -> Point2:
        return Point2(self.m00 * p.x + self.m01 * p.y + self.t0,
                      self.m10 * p.x + self.m11 * p.y + self.t1)

    def apply_line(self, line: Line2) -> Line2:
        det = self.m00 * self.m11 - self.m01 * self.m10
        # Row vector (a, b) times M^{-1}.
        na = (line.a * self.m11 - line.b * self.m10) / det
        nb = (-line.a * self.m01 + line.b * self.m00) / det
        nc = line.c + na * self.t0 + nb * self.t1
        return Line2(na, nb, nc)
