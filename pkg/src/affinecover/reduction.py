"""Transformation of a graph into its two-line instance, and back.

The assembled instance glues four pieces: the gadget substitution of the
input, an anchor gadget of two edge-sharing K4s pinned around the
origin, a long connector path, and a triangulated spiral winding around
everything. On the two coordinate axes the spiral's gap face partitions
each axis ray into radial level intervals; a leveled-planar witness of
the input then drives an explicit drawing, and a valid drawing can be
read back into a leveling of the input restricted to original vertices.

Radial layout used by the forward drawing (all exact integers):

    anchor          radii 1..2 around the origin
    spiral crossing k   inner 4**(k+1), outer 2*4**(k+1), start at 4
    level j content     base 4**(j+2) + slot
    level j path lane   low slots 8+s / 40+s (levels 1, 2 only),
                        high slot 4**(j+3)

Geometric growth by factor 4 keeps consecutive structures radially
nested; the drawing is still re-validated exactly before it is returned,
never trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .errors import DegenerateInputError, DisconnectedGraphError, FormatError
from .geom import Point2, pt2, validate_drawing2
from .geom.drawings import DrawingReport, Violation
from .graphs import (
    Graph,
    LevelAssignment,
    ROLE_ANCHOR,
    ROLE_GADGET_MID,
    ROLE_PATH,
    ROLE_SPIRAL,
    SPIRAL_RAYS,
    anchor_gadget,
    edge,
    gadget_mid_ids,
    is_connected,
    leveled_planar_search,
    make_graph,
    make_spiral,
    spiral_level_walls,
    spiral_positions,
    substitute_k24,
    validate_leveling,
)

COMPONENT_GPRIME = "gprime"
COMPONENT_ANCHOR = "g0"
COMPONENT_PATH = "path"
COMPONENT_SPIRAL = "spiral"

# Anchor gadget drawing, pinned so the origin is interior to the shared edge.
ANCHOR_COORDS = ((1, 0), (-1, 0), (0, 1), (0, 2), (0, -1), (0, -2))
ANCHOR_SHARED = 0       # local id of the shared vertex on the positive x ray
ANCHOR_PATH_PORT = 5    # local id of (0, -2), where the connector path starts


@dataclass
class ReductionOutput:
    graph: Graph
    source: Graph
    attachment: int
    path_length: int
    inner_face: tuple
    component_of: dict
    anchor_base: int
    path_base: int
    spiral_base: int

    @property
    def path_ids(self) -> tuple:
        return tuple(range(self.path_base, self.path_base + self.path_length - 1))

    def mids_of(self, e) -> tuple:
        return gadget_mid_ids(self.source, e)


def _check_planar(g: Graph) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(h)
    return ok


def build_reduction(g: Graph, attachment: int) -> ReductionOutput:
    """Assemble the two-line instance for a connected planar input.

    The connector path gets length L = 2n + 2: a leveled witness never
    needs more than n levels, the doubled gadget layout at most 2n, and
    the parity slack lets the path burn leftover edges by zigzagging.
    """
    if not (0 <= attachment < g.n):
        raise FormatError(f"attachment vertex {attachment} out of range")
    if not is_connected(g):
        raise DisconnectedGraphError("the reduction needs a connected input")
    if not _check_planar(g):
        raise DegenerateInputError("the reduction is only meaningful for planar inputs")

    gprime = substitute_k24(g)
    anchor = anchor_gadget()
    L = 2 * g.n + 2
    spiral, inner_local = make_spiral(L)

    anchor_base = gprime.n
    path_base = anchor_base + 6
    spiral_base = path_base + (L - 1)
    n = spiral_base + spiral.n

    edges = list(gprime.edges)
    roles = dict(gprime.roles)
    for u, v in anchor.edges:
        edges.append((u + anchor_base, v + anchor_base))
    for v in range(6):
        roles[v + anchor_base] = ROLE_ANCHOR
    chain = [anchor_base + ANCHOR_PATH_PORT] + \
        list(range(path_base, path_base + L - 1)) + [attachment]
    for a, b in zip(chain, chain[1:]):
        edges.append((a, b))
    for v in range(path_base, path_base + L - 1):
        roles[v] = ROLE_PATH
    for u, v in spiral.edges:
        edges.append((u + spiral_base, v + spiral_base))
    for v in range(spiral.n):
        roles[v + spiral_base] = ROLE_SPIRAL
    edges.append((anchor_base + ANCHOR_SHARED, spiral_base))  # attach spiral to anchor

    component_of = {}
    for v in range(n):
        if v < anchor_base:
            component_of[v] = COMPONENT_GPRIME
        elif v < path_base:
            component_of[v] = COMPONENT_ANCHOR
        elif v < spiral_base:
            component_of[v] = COMPONENT_PATH
        else:
            component_of[v] = COMPONENT_SPIRAL

    distinguished = {
        "attachment": attachment,
        "anchor_shared_a": anchor_base,
        "anchor_shared_b": anchor_base + 1,
        "path_start": anchor_base + ANCHOR_PATH_PORT,
        "spiral_start": spiral_base,
    }
    graph = make_graph(n, edges, roles, distinguished)
    inner = tuple(v + spiral_base for v in inner_local)
    return ReductionOutput(graph, g, attachment, L, inner, component_of,
                           anchor_base, path_base, spiral_base)


# -- two-line drawings ----------------------------------------------------------

def ray_of(p: Point2) -> int:
    """Axis ray index of an on-axis point: 0 +x, 1 +y, 2 -x, 3 -y."""
    if p.y == 0 and p.x > 0:
        return 0
    if p.x == 0 and p.y > 0:
        return 1
    if p.y == 0 and p.x < 0:
        return 2
    if p.x == 0 and p.y < 0:
        return 3
    raise DegenerateInputError(f"point {p} is not on a coordinate axis ray")


def radius_of(p: Point2) -> Fraction:
    return abs(p.x) + abs(p.y)


def validate_two_line(g: Graph, positions) -> DrawingReport:
    """Drawing validity plus the both-axes constraint."""
    off = tuple(Violation("off-axis", vertex=v)
                for v in range(g.n)
                if positions[v].x != 0 and positions[v].y != 0)
    base = validate_drawing2(g, positions)
    return DrawingReport(base.ok and not off, off + base.violations)


def leveling_for_attachment(g: Graph, attachment: int,
                            max_levels: int) -> LevelAssignment | None:
    """Leveled witness placing the attachment last in its level order.

    The forward drawing routes the connector path radially outside the
    gadget layout, so it can only reach the attachment if that vertex is
    extremal within its level.
    """
    return leveled_planar_search(g, max_levels, require_last=attachment)


def _level_ray(j: int) -> tuple[int, int]:
    return SPIRAL_RAYS[(j - 1) % 4]


def _on_level(j: int, radius) -> Point2:
    dx, dy = _level_ray(j)
    return pt2(dx * radius, dy * radius)


def forward_draw(g: Graph, lev: LevelAssignment, red: ReductionOutput) -> dict:
    """Exact two-line drawing of the assembled instance from a leveled witness.

    Original vertices land on even absolute levels (level i of the witness
    on absolute level 2i), gadget mids on the odd levels in between, the
    connector path zigzags across levels 1 and 2 below the content lane
    and then climbs above it. The result is re-validated before return.
    """
    ok, problems = validate_leveling(g, lev)
    if not ok:
        raise DegenerateInputError("leveling witness invalid: " + "; ".join(problems))
    m = lev.m
    L = red.path_length
    if 2 * m > L:
        raise AssertionError("path length cannot accommodate the witness levels")
    att_level = lev.level_of[red.attachment]
    if lev.order_within[att_level][-1] != red.attachment:
        raise DegenerateInputError(
            "attachment vertex must be last in its level order; "
            "use leveling_for_attachment to obtain such a witness")

    pos: dict[int, Point2] = {}

    for local, (x, y) in enumerate(ANCHOR_COORDS):
        pos[red.anchor_base + local] = pt2(x, y)
    for local, p in spiral_positions(L).items():
        pos[red.spiral_base + local] = p

    # Gadget layout: witness level i at absolute level 2i, channel mids between.
    for i in range(1, m + 1):
        for slot, v in enumerate(lev.order_within[i]):
            pos[v] = _on_level(2 * i, 4 ** (2 * i + 2) + slot)
    for i in range(1, m):
        channel = [e for e in sorted(g.edges)
                   if {lev.level_of[e[0]], lev.level_of[e[1]]} == {i, i + 1}]
        channel.sort(key=lambda e: tuple(
            lev.position(w) for w in sorted(e, key=lambda w: lev.level_of[w])))
        lam = 2 * i + 1
        slot = 0
        for e in channel:
            for mid in red.mids_of(e):
                pos[mid] = _on_level(lam, 4 ** (lam + 2) + slot)
                slot += 1

    # Connector path: entry, 2k zigzag edges low across levels 1 and 2,
    # then a climb in the high lane to just below the attachment level.
    target = 2 * att_level
    k = (L - target) // 2
    assert k >= 1 and 2 * k + target == L
    lane: list[Point2] = []
    for j in range(k):
        lane.append(_on_level(1, 8 + j))
        lane.append(_on_level(2, 40 + j))
    lane.append(_on_level(1, 8 + k))
    for level in range(2, target):
        lane.append(_on_level(level, 4 ** (level + 3)))
    assert len(lane) == L - 1
    for wid, p in zip(red.path_ids, lane):
        pos[wid] = p

    report = validate_two_line(red.graph, pos)
    if not report.ok:
        raise AssertionError(f"forward drawing failed exact validation: {report}")
    return pos


def extract_levels(red: ReductionOutput, positions) -> LevelAssignment:
    """Recover a leveling of the source from a two-line drawing of the instance.

    Levels are read off as the radial gaps between spiral windings,
    numbered from the innermost gap holding a substituted vertex; original
    vertices must occupy the odd relative levels and gadget mids the even
    ones, otherwise the drawing is rejected.
    """
    report = validate_two_line(red.graph, positions)
    if not report.ok:
        raise DegenerateInputError(f"drawing fails validation: {report}")

    walls = spiral_level_walls(red.path_length)
    gaps = []
    for j, (_, win, wout) in enumerate(walls, start=1):
        p_in = positions[red.spiral_base + win]
        p_out = positions[red.spiral_base + wout]
        ray = ray_of(p_in)
        if ray_of(p_out) != ray or radius_of(p_in) >= radius_of(p_out):
            raise DegenerateInputError(
                f"spiral gap {j} is not drawn as a radial interval")
        gaps.append((ray, radius_of(p_in), radius_of(p_out)))

    def gap_level(v: int) -> int:
        p = positions[v]
        ray, rad = ray_of(p), radius_of(p)
        hits = [j for j, (gr, rin, rout) in enumerate(gaps, start=1)
                if gr == ray and rin < rad < rout]
        if len(hits) != 1:
            raise DegenerateInputError(
                f"vertex {v} does not sit in a unique spiral gap")
        return hits[0]

    g = red.source
    originals = list(range(g.n))
    mids = [v for v in range(red.graph.n)
            if red.graph.roles[v] == ROLE_GADGET_MID]
    absolute = {v: gap_level(v) for v in originals + mids}
    base = min(absolute.values())
    rel = {v: a - base + 1 for v, a in absolute.items()}
    for v in originals:
        if rel[v] % 2 == 0:
            raise DegenerateInputError(
                f"original vertex {v} sits on an even level; parity structure broken")
    for v in mids:
        if rel[v] % 2 == 1:
            raise DegenerateInputError(
                f"gadget vertex {v} sits on an odd level; parity structure broken")

    level_of = {v: (rel[v] + 1) // 2 for v in originals}
    for u, v in sorted(g.edges):
        if abs(level_of[u] - level_of[v]) != 1:
            raise DegenerateInputError(
                f"edge ({u}, {v}) does not span consecutive recovered levels")
        between = {rel[mid] for mid in red.mids_of((u, v))}
        if between != {(rel[u] + rel[v]) // 2}:
            raise DegenerateInputError(
                f"gadget of edge ({u}, {v}) does not sit between its endpoints")

    m = max(level_of.values())
    order = {}
    for i in range(1, m + 1):
        members = [v for v in originals if level_of[v] == i]
        members.sort(key=lambda v: (radius_of(positions[v]), v))
        order[i] = tuple(members)
    lev = LevelAssignment(level_of, order)
    ok, problems = validate_leveling(g, lev)
    if not ok:
        raise DegenerateInputError("recovered leveling invalid: " + "; ".join(problems))
    return lev


def gadget_level_span(red: ReductionOutput, positions, e) -> tuple[int, ...]:
    """Sorted distinct relative levels occupied by one gadget's six vertices."""
    walls = spiral_level_walls(red.path_length)
    gaps = []
    for j, (_, win, wout) in enumerate(walls, start=1):
        p_in = positions[red.spiral_base + win]
        p_out = positions[red.spiral_base + wout]
        gaps.append((ray_of(p_in), radius_of(p_in), radius_of(p_out)))

    def level(v):
        p = positions[v]
        ray, rad = ray_of(p), radius_of(p)
        for j, (gr, rin, rout) in enumerate(gaps, start=1):
            if gr == ray and rin < rad < rout:
                return j
        raise DegenerateInputError(f"vertex {v} not inside any spiral gap")

    u, v = e
    levels = {level(u), level(v)} | {level(mid) for mid in red.mids_of(e)}
    return tuple(sorted(levels))


# -- serialization ---------------------------------------------------------------

def reduction_to_json(red: ReductionOutput) -> str:
    payload = {
        "source": {
            "n": red.source.n,
            "edges": sorted(list(e) for e in red.source.edges),
            "roles": {str(v): red.source.roles[v] for v in range(red.source.n)},
        },
        "attachment": red.attachment,
        "path_length": red.path_length,
        "anchor_base": red.anchor_base,
        "path_base": red.path_base,
        "spiral_base": red.spiral_base,
        "inner_face": list(red.inner_face),
    }
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def reduction_from_json(text: str) -> ReductionOutput:
    try:
        payload = json.loads(text)
        src = payload["source"]
        g = make_graph(src["n"], [tuple(e) for e in src["edges"]],
                       {int(v): r for v, r in src.get("roles", {}).items()})
        red = build_reduction(g, payload["attachment"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad reduction file: {exc}") from exc
    if red.path_length != payload.get("path_length", red.path_length):
        raise FormatError("reduction file inconsistent with rebuilt instance")
    return red
