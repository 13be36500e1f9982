"""Two-plane drawings: construction, statistics, saturation, the bound."""

import pytest

from affinecover.errors import CapacityError
from affinecover.geom import PLANE_Y0, PLANE_Z0, plane_intersection, pt3
from affinecover.geom.drawings import segment_spine_trace
from affinecover.graphs import make_graph
from affinecover.planes import (
    TwoPlaneDrawing,
    bound_check,
    random_two_plane,
    read_two_plane,
    saturate,
    spine_stats,
    tight_construction,
    write_two_plane,
)


def test_tight_construction_edge_counts():
    d = tight_construction(7)
    assert d.m == 16 and d.validate().ok
    assert tight_construction(10).m == 31
    for n in (7, 12, 20):
        assert tight_construction(n).m == 5 * n - 19


def test_tight_construction_edge_partition():
    n = 9
    d = tight_construction(n)
    spine_edges = [e for e, t in d.edge_plane.items() if t == "both"]
    a_edges = [e for e, t in d.edge_plane.items() if t == "A"]
    b_edges = [e for e, t in d.edge_plane.items() if t == "B"]
    assert len(spine_edges) == n - 5
    assert len(a_edges) == 2 * (n - 4) + 1
    assert len(b_edges) == 2 * (n - 4) + 1


def test_tight_construction_small_n_rejected():
    with pytest.raises(CapacityError):
        tight_construction(6)


def test_spine_stats_tight7():
    st = spine_stats(tight_construction(7))
    assert (st.s, st.a, st.b, st.t, st.internal_gaps) == (3, 2, 2, 2, 0)


def test_spine_stats_path_on_spine():
    n = 5
    pos = {v: pt3(v + 1, 0, 0) for v in range(n)}
    edges = [(v, v + 1) for v in range(n - 1)]
    tags = {(v, v + 1): "both" for v in range(n - 1)}
    d = TwoPlaneDrawing((PLANE_Z0, PLANE_Y0), pos, tags, make_graph(n, edges))
    st = spine_stats(d)
    assert st.t == st.s - 1 and st.internal_gaps == 0


def test_spine_stats_isolated_spine_vertices():
    pos = {0: pt3(1, 0, 0), 1: pt3(5, 0, 0)}
    d = TwoPlaneDrawing((PLANE_Z0, PLANE_Y0), pos, {}, make_graph(2, []))
    st = spine_stats(d)
    assert (st.s, st.t, st.internal_gaps) == (2, 0, 1)


def test_apex_edges_cross_spine_in_external_gaps():
    n = 9
    d = tight_construction(n)
    base, direction = plane_intersection(*d.planes)

    def spine_param(p):
        comps = [(abs(c), k) for k, c in enumerate(direction)]
        _, k = max(comps)
        return (p[k] - base[k]) / direction[k]

    params = sorted(spine_param(d.positions[v]) for v in range(n - 4))
    a_edge = (n - 4, n - 3)
    b_edge = (n - 2, n - 1)
    tr_a = segment_spine_trace(d.positions[a_edge[0]], d.positions[a_edge[1]],
                               base, direction, d.planes[0])
    tr_b = segment_spine_trace(d.positions[b_edge[0]], d.positions[b_edge[1]],
                               base, direction, d.planes[1])
    # Each apex edge pierces the spine at a single point strictly outside
    # the span of the spine vertices, one per external gap.
    assert tr_a is not None and tr_a[0] == tr_a[1]
    assert tr_b is not None and tr_b[0] == tr_b[1]
    hits = sorted([tr_a[0], tr_b[0]])
    assert hits[0] < params[0] and hits[1] > params[-1]


def test_rerouted_apex_edge_through_spine_vertex_fails():
    d = tight_construction(7)
    # Shift the A apexes so their joining edge passes through the spine
    # vertex at x = 1.
    d.positions[3] = pt3(1, 1, 0)
    d.positions[4] = pt3(1, -1, 0)
    report = d.validate()
    assert not report.ok


def test_saturate_tight_is_already_maximal():
    d = tight_construction(8)
    sat = saturate(d)
    assert sat.m == d.m


def test_saturate_idempotent():
    d = random_two_plane(10, 3)
    sat = saturate(d)
    again = saturate(sat)
    assert again.graph.edges == sat.graph.edges
    assert again.edge_plane == sat.edge_plane


def test_saturate_all_on_spine_gives_path():
    n = 5
    pos = {v: pt3(v + 1, 0, 0) for v in range(n)}
    d = TwoPlaneDrawing((PLANE_Z0, PLANE_Y0), pos, {}, make_graph(n, []))
    sat = saturate(d)
    assert sat.m == n - 1  # collinear chords would cover intermediate vertices
    assert all(t == "both" for t in sat.edge_plane.values())


def test_single_edge_on_plane_a_valid():
    pos = {0: pt3(0, 1, 0), 1: pt3(3, 2, 0)}
    d = TwoPlaneDrawing((PLANE_Z0, PLANE_Y0), pos, {(0, 1): "A"},
                        make_graph(2, [(0, 1)]))
    assert d.validate().ok


def test_random_two_plane_deterministic_and_bounded():
    a = random_two_plane(12, 41)
    b = random_two_plane(12, 41)
    assert write_two_plane(a) == write_two_plane(b)
    for seed in range(8):
        d = random_two_plane(12, seed)
        assert d.validate().ok
        rep = bound_check(d)
        assert rep.passed
        st = spine_stats(d)
        assert st.a + st.b + st.s == 12
        if st.s >= 1:
            assert st.internal_gaps == st.s - st.t - 1


def test_bound_check_small_case_table():
    pos = {0: pt3(1, 0, 0), 1: pt3(2, 0, 0), 2: pt3(0, 1, 0), 3: pt3(0, 0, 1)}
    edges = {(0, 1): "both", (0, 2): "A", (1, 2): "A", (0, 3): "B", (1, 3): "B"}
    d = TwoPlaneDrawing((PLANE_Z0, PLANE_Y0), pos, edges,
                        make_graph(4, list(edges)))
    assert d.validate().ok
    rep = bound_check(d)
    assert rep.small_case and rep.bound == 6 and rep.passed


def test_serialization_roundtrip():
    d = tight_construction(9)
    text = write_two_plane(d)
    back = read_two_plane(text)
    assert write_two_plane(back) == text
    assert back.validate().ok


def test_bound_equality_examples():
    for n in (7, 12, 20):
        rep = bound_check(tight_construction(n))
        assert rep.passed and rep.m == rep.bound
