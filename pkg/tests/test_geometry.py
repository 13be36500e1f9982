"""Exact predicate semantics, drawing validation and affine invariance."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from affinecover.errors import DegenerateInputError
from affinecover.geom import (
    Affine2,
    Line2,
    SegRelation,
    X_AXIS,
    Y_AXIS,
    classify_segments,
    cover_by_lines,
    pt2,
    validate_drawing2,
)
from affinecover.graphs import complete_graph, make_graph, path_graph


def test_classify_proper_crossing():
    rel = classify_segments(pt2(0, 0), pt2(2, 2), pt2(0, 2), pt2(2, 0))
    assert rel is SegRelation.PROPER_CROSSING


def test_classify_shared_endpoint_only():
    rel = classify_segments(pt2(0, 0), pt2(1, 0), pt2(1, 0), pt2(2, 1))
    assert rel is SegRelation.SHARED_ENDPOINT


def test_classify_collinear_overlap():
    rel = classify_segments(pt2(0, 0), pt2(2, 0), pt2(1, 0), pt2(3, 0))
    assert rel is SegRelation.COLLINEAR_OVERLAP


def test_classify_endpoint_in_interior():
    rel = classify_segments(pt2(0, 0), pt2(4, 0), pt2(2, 0), pt2(2, 3))
    assert rel is SegRelation.ENDPOINT_IN_INTERIOR


def test_classify_collinear_touch_is_shared_endpoint():
    rel = classify_segments(pt2(0, 0), pt2(2, 0), pt2(2, 0), pt2(5, 0))
    assert rel is SegRelation.SHARED_ENDPOINT


def test_classify_disjoint_parallel():
    rel = classify_segments(pt2(0, 0), pt2(2, 0), pt2(0, 1), pt2(2, 1))
    assert rel is SegRelation.DISJOINT


def test_classify_degenerate_raises():
    with pytest.raises(DegenerateInputError):
        classify_segments(pt2(1, 1), pt2(1, 1), pt2(0, 0), pt2(1, 0))


def test_classify_rational_coordinates():
    rel = classify_segments(pt2(0, 0), pt2(1, 1),
                            pt2(Fraction(1, 2), 0), pt2(0, Fraction(1, 2)))
    assert rel is SegRelation.PROPER_CROSSING


coord = st.integers(min_value=-25, max_value=25)
point = st.tuples(coord, coord)


@given(point, point, point, point)
def test_classify_symmetric(p, q, r, s):
    if p == q or r == s:
        return
    a, b, c, d = pt2(*p), pt2(*q), pt2(*r), pt2(*s)
    rel = classify_segments(a, b, c, d)
    assert rel == classify_segments(c, d, a, b)
    assert rel == classify_segments(b, a, c, d)
    assert rel == classify_segments(a, b, d, c)


# -- drawing validation ------------------------------------------------------

def k4_valid_positions():
    return {0: pt2(0, 0), 1: pt2(4, 0), 2: pt2(0, 4), 3: pt2(1, 1)}


def test_validate_k4_stacked_point_passes():
    report = validate_drawing2(complete_graph(4), k4_valid_positions())
    assert report.ok, report


def test_validate_k4_square_diagonals_fail():
    pos = {0: pt2(0, 0), 1: pt2(1, 0), 2: pt2(1, 1), 3: pt2(0, 1)}
    report = validate_drawing2(complete_graph(4), pos)
    assert not report.ok
    kinds = {v.kind for v in report.violations}
    assert "proper-crossing" in kinds
    crossing = [v for v in report.violations if v.kind == "proper-crossing"]
    assert {crossing[0].edge, crossing[0].other_edge} == {(0, 2), (1, 3)}


def test_validate_collinear_path_passes():
    pos = {0: pt2(0, 0), 1: pt2(1, 0), 2: pt2(2, 0)}
    assert validate_drawing2(path_graph(3), pos).ok


def test_validate_vertex_on_edge_fails():
    g = make_graph(3, [(0, 1)])
    pos = {0: pt2(0, 0), 1: pt2(2, 0), 2: pt2(1, 0)}
    report = validate_drawing2(g, pos)
    assert not report.ok
    assert any(v.kind == "vertex-on-edge" and v.vertex == 2
               for v in report.violations)


def test_validate_coincident_vertices_fail():
    g = make_graph(2, [])
    report = validate_drawing2(g, {0: pt2(1, 1), 1: pt2(1, 1)})
    assert not report.ok
    assert report.violations[0].kind == "coincident-vertices"


def test_validate_missing_position_raises():
    from affinecover.errors import FormatError

    with pytest.raises(FormatError):
        validate_drawing2(path_graph(3), {0: pt2(0, 0), 1: pt2(1, 0)})


def test_validate_collinear_overlap_fails():
    g = make_graph(4, [(0, 1), (2, 3)])
    pos = {0: pt2(0, 0), 1: pt2(3, 0), 2: pt2(1, 0), 3: pt2(4, 0)}
    report = validate_drawing2(g, pos)
    assert not report.ok
    assert any(v.kind == "collinear-overlap" for v in report.violations)


def random_affine(rng) -> Affine2:
    while True:
        vals = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)]
        try:
            return Affine2(*vals)
        except DegenerateInputError:
            continue


def test_validate_affine_invariance():
    g = complete_graph(4)
    good = k4_valid_positions()
    bad = {0: pt2(0, 0), 1: pt2(1, 0), 2: pt2(1, 1), 3: pt2(0, 1)}
    rng = random.Random(20250809)
    for _ in range(5):
        f = random_affine(rng)
        assert validate_drawing2(g, {v: f.apply(p) for v, p in good.items()}).ok
        assert not validate_drawing2(g, {v: f.apply(p) for v, p in bad.items()}).ok


def test_cover_by_lines_basics():
    diag = Line2.through(pt2(0, 0), pt2(1, 1))
    assert cover_by_lines([pt2(0, 0), pt2(1, 1)], [diag])
    assert not cover_by_lines([pt2(0, 0)], [])
    assert cover_by_lines([], [])


def test_cover_by_lines_affine_invariance():
    pts = [pt2(0, 0), pt2(2, 0), pt2(0, 3), pt2(1, 1)]
    lines = [X_AXIS, Y_AXIS, Line2.through(pt2(2, 0), pt2(0, 3)), Line2.through(pt2(0, 0), pt2(1, 1))]
    assert cover_by_lines(pts, lines)
    rng = random.Random(7)
    for _ in range(5):
        f = random_affine(rng)
        assert cover_by_lines([f.apply(p) for p in pts],
                              [f.apply_line(l) for l in lines])


def test_line_normalization_is_canonical():
    assert Line2(2, 4, 6) == Line2(1, 2, 3)
    assert Line2.through(pt2(0, 0), pt2(2, 2)) == Line2.through(pt2(5, 5), pt2(-1, -1))
    assert Line2.horizontal(3) == Line2(0, 2, 6)
    with pytest.raises(DegenerateInputError):
        Line2(0, 0, 1)
