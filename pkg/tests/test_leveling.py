"""Exhaustive leveled-planarity oracle."""

import pytest

from affinecover.errors import CapacityError
from affinecover.graphs import (
    LevelAssignment,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    leveled_planar_search,
    make_graph,
    path_graph,
    star_graph,
    validate_leveling,
)


def test_k4_has_no_leveling():
    assert leveled_planar_search(complete_graph(4), 4) is None


def test_p4_leveling_found_and_valid():
    g = path_graph(4)
    lev = leveled_planar_search(g, 4)
    assert lev is not None
    ok, problems = validate_leveling(g, lev)
    assert ok, problems


def test_c4_decided_by_search():
    g = cycle_graph(4)
    lev = leveled_planar_search(g, 4)
    assert lev is not None
    ok, problems = validate_leveling(g, lev)
    assert ok, problems
    # A cycle cannot live on two levels: the four edges would form an
    # inverted pair in any order.
    assert lev.m >= 3


def test_star_and_bipartite():
    lev = leveled_planar_search(star_graph(5), 3)
    assert lev is not None and lev.m == 2
    lev = leveled_planar_search(complete_bipartite(2, 4), 6)
    assert lev is not None
    ok, _ = validate_leveling(complete_bipartite(2, 4), lev)
    assert ok


def test_disconnected_components_stack():
    g = make_graph(6, [(0, 1), (2, 3), (3, 4)])
    lev = leveled_planar_search(g, 4)
    assert lev is not None
    ok, problems = validate_leveling(g, lev)
    assert ok, problems


def test_monotone_in_max_levels():
    for g in (path_graph(5), cycle_graph(6), star_graph(4)):
        w3 = leveled_planar_search(g, 3)
        w5 = leveled_planar_search(g, 5)
        assert w3 is not None
        assert w5.level_of == w3.level_of
        assert w5.order_within == w3.order_within
        ok, _ = validate_leveling(g, w3)
        assert ok


def test_require_last_constrains_witness():
    g = cycle_graph(4)
    for v in range(4):
        lev = leveled_planar_search(g, 4, require_last=v)
        assert lev is not None
        assert lev.order_within[lev.level_of[v]][-1] == v
        assert validate_leveling(g, lev)[0]


def test_capacity_limit():
    with pytest.raises(CapacityError):
        leveled_planar_search(path_graph(13), 13)


def test_validate_leveling_rejects_bad_witnesses():
    g = path_graph(3)
    bad_edge = LevelAssignment({0: 1, 1: 1, 2: 2}, {1: (0, 1), 2: (2,)})
    ok, problems = validate_leveling(g, bad_edge)
    assert not ok and any("consecutive" in p for p in problems)
    bad_order = LevelAssignment({0: 1, 1: 2, 2: 3}, {1: (0,), 2: (2,), 3: (1,)})
    ok, problems = validate_leveling(g, bad_order)
    assert not ok
