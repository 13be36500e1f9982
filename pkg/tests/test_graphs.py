"""Generators and combinatorial checks of the graph core."""

import random

import networkx as nx
import pytest

from affinecover.errors import CapacityError, DisconnectedGraphError, FormatError
from affinecover.graphs import (
    anchor_gadget,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diameter,
    gadget_mid_ids,
    is_linear_forest,
    make_graph,
    path_graph,
    random_tree,
    read_graph,
    read_levels,
    stacked_triangulation,
    star_graph,
    substitute_k24,
    two_coloring,
    write_graph,
    write_levels,
    LevelAssignment,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# -- stacked triangulations ----------------------------------------------------

@pytest.mark.parametrize("depth", range(0, 7))
def test_stacked_counts(depth):
    g, tree = stacked_triangulation(depth)
    assert g.n == (3 ** depth + 5) // 2
    assert len(tree.frontier()) == 3 ** depth
    assert tree.stacked_count() == (3 ** depth - 1) // 2
    if depth >= 1:
        assert g.m == 3 * g.n - 6


def test_stacked_depth0_is_triangle():
    g, _ = stacked_triangulation(0)
    assert g.n == 3 and g.m == 3
    assert len(stacked_triangulation(0)[1].frontier()) == 1


def test_stacked_depth1_is_k4():
    g, _ = stacked_triangulation(1)
    assert g.n == 4 and g.m == 6
    assert nx.is_isomorphic(to_nx(g), nx.complete_graph(4))


def test_stacked_depth2_census():
    g, tree = stacked_triangulation(2)
    assert g.n == 7 and g.m == 15
    assert len(tree.frontier()) == 9


def test_stacked_face_corners_adjacent():
    g, tree = stacked_triangulation(3)
    stack = [tree.root]
    while stack:
        node = stack.pop()
        a, b, c = node.corners
        for u, v in ((a, b), (a, c), (b, c)):
            assert (min(u, v), max(u, v)) in g.edges
        stack.extend(node.children)


def test_stacked_capacity():
    with pytest.raises(CapacityError):
        stacked_triangulation(13)


# -- gadget substitution ---------------------------------------------------------

def test_substitute_single_edge_is_k24():
    g = substitute_k24(path_graph(2))
    assert g.n == 6 and g.m == 8
    assert nx.is_isomorphic(to_nx(g), nx.complete_bipartite_graph(2, 4))


def test_substitute_p3_counts():
    g = substitute_k24(path_graph(3))
    assert g.n == 3 + 4 * 2 and g.m == 8 * 2


def test_substitute_empty_graph_unchanged():
    g = substitute_k24(make_graph(5, []))
    assert g.n == 5 and g.m == 0


def test_substitute_roles_and_mid_ids():
    base = path_graph(3)
    g = substitute_k24(base)
    for v in range(3):
        assert g.roles[v] == "original"
    for v in range(3, g.n):
        assert g.roles[v] == "gadgetMid"
    mids = gadget_mid_ids(base, (0, 1))
    assert mids == (3, 4, 5, 6)
    for mid in mids:
        assert (0, mid) in g.edges and (1, mid) in g.edges


@pytest.mark.parametrize("base", [path_graph(4), cycle_graph(5), complete_graph(4),
                                  star_graph(3)])
def test_substitute_always_bipartite(base):
    assert two_coloring(substitute_k24(base)) is not None


# -- anchor gadget ----------------------------------------------------------------

def test_anchor_gadget_shape():
    g = anchor_gadget()
    assert g.n == 6 and g.m == 11
    shared = (g.distinguished["shared_a"], g.distinguished["shared_b"])
    assert (min(shared), max(shared)) in g.edges
    degs = sorted(g.degree(v) for v in range(6))
    assert degs == [3, 3, 3, 3, 5, 5]
    assert {g.degree(v) for v in shared} == {5}


# -- structure queries --------------------------------------------------------------

def test_diameter_examples():
    assert diameter(complete_bipartite(2, 4)) == 2
    assert diameter(path_graph(5)) == 4
    assert diameter(complete_graph(4)) == 1


def test_diameter_disconnected_raises():
    with pytest.raises(DisconnectedGraphError):
        diameter(make_graph(4, [(0, 1), (2, 3)]))


def test_is_linear_forest():
    assert is_linear_forest(path_graph(5))
    assert is_linear_forest(make_graph(6, [(0, 1), (3, 4)]))
    assert not is_linear_forest(complete_graph(4))
    assert not is_linear_forest(cycle_graph(3))
    assert not is_linear_forest(star_graph(3))
    assert is_linear_forest(make_graph(3, []))


def test_random_tree_is_tree():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 10)
        t = random_tree(n, rng)
        assert t.m == max(0, n - 1)
        assert nx.is_tree(to_nx(t)) or n == 0


# -- text formats --------------------------------------------------------------------

def test_graph_roundtrip():
    g = substitute_k24(cycle_graph(4))
    text = write_graph(g)
    h = read_graph(text)
    assert h.n == g.n and h.edges == g.edges and h.roles == g.roles
    assert write_graph(h) == text


def test_graph_format_errors():
    with pytest.raises(FormatError):
        read_graph("2 1\n0 0\n")
    with pytest.raises(FormatError):
        read_graph("2 2\n0 1\n")
    with pytest.raises(FormatError):
        read_graph("")


def test_levels_roundtrip():
    lev = LevelAssignment({0: 1, 1: 2, 2: 2}, {1: (0,), 2: (2, 1)})
    text = write_levels(lev)
    back = read_levels(text)
    assert back.level_of == lev.level_of
    assert back.order_within == lev.order_within
