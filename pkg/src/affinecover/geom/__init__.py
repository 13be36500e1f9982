"""Exact rational geometry: predicates, validators, covers, formats."""

from .cover import min_cover_size_bruteforce, min_line_cover
from .drawings import DrawingReport, Violation, cover_by_lines, validate_drawing2, validate_drawing3
from .primitives import (
    PLANE_Y0,
    PLANE_Z0,
    X_AXIS,
    Y_AXIS,
    Affine2,
    Line2,
    Plane3,
    Point2,
    Point3,
    Rat,
    plane_intersection,
    pt2,
    pt3,
)
from .segments import SegRelation, classify_segments, orient, point_in_open_segment

__all__ = [
    "Affine2",
    "DrawingReport",
    "Line2",
    "PLANE_Y0",
    "PLANE_Z0",
    "Plane3",
    "Point2",
    "Point3",
    "Rat",
    "SegRelation",
    "Violation",
    "X_AXIS",
    "Y_AXIS",
    "classify_segments",
    "cover_by_lines",
    "min_cover_size_bruteforce",
    "min_line_cover",
    "orient",
    "plane_intersection",
    "point_in_open_segment",
    "pt2",
    "pt3",
    "validate_drawing2",
    "validate_drawing3",
]
