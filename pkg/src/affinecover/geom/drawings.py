"""Crossing-freeness validators for 2D and two-plane 3D drawings.

Validators return a report listing every violation instead of raising;
raising is reserved for malformed input (missing positions, parallel
planes). The all-clear scan runs on rescaled integer coordinates through
the kernel backend; only failing drawings pay for detailed enumeration.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from ..errors import DegenerateInputError, FormatError
from ..kernels import MAX_FAST_COORD, impl, pure
from .primitives import Line2, Plane3, Point2, Point3, cross3, plane_intersection
from .segments import SegRelation

SPINE_TAG = "both"


@dataclass(frozen=True)
class Violation:
    kind: str
    edge: tuple[int, int] | None = None
    other_edge: tuple[int, int] | None = None
    vertex: int | None = None
    note: str = ""

    def __str__(self):
        parts = [self.kind]
        if self.edge is not None:
            parts.append(f"edge {self.edge}")
        if self.other_edge is not None:
            parts.append(f"edge {self.other_edge}")
        if self.vertex is not None:
            parts.append(f"vertex {self.vertex}")
        if self.note:
            parts.append(self.note)
        return ": ".join(parts)


@dataclass(frozen=True)
class DrawingReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def _require_positions(graph, positions):
    for v in range(graph.n):
        if v not in positions:
            raise FormatError(f"vertex {v} has no position")


def _scaled_coords(points: list[Point2]) -> tuple[list[int], list[int]]:
    denoms = [c.denominator for p in points for c in p]
    scale = lcm(*denoms) if denoms else 1
    xs = [int(p.x * scale) for p in points]
    ys = [int(p.y * scale) for p in points]
    return xs, ys


def _coincident_violations(positions_list) -> list[Violation]:
    seen: dict[tuple, int] = {}
    out = []
    for v, p in enumerate(positions_list):
        if p in seen:
            out.append(Violation("coincident-vertices", vertex=v,
                                 note=f"same position as vertex {seen[p]}"))
        else:
            seen[p] = v
    return out


def _validate_segments(n: int, edges: list[tuple[int, int]],
                       xs: list[int], ys: list[int]) -> list[Violation]:
    """Edge-pair and vertex-on-edge violations over integer coordinates."""
    m = len(edges)
    small = (max((abs(c) for c in xs + ys), default=0) < MAX_FAST_COORD)
    if small:
        axs = array("q", xs)
        ays = array("q", ys)
        eu = array("i", [e[0] for e in edges])
        ev = array("i", [e[1] for e in edges])
        if (m == 0 or impl.pair_scan(axs, ays, eu, ev) == -1) and \
                (m == 0 or impl.vertex_scan(axs, ays, n, eu, ev) == -1):
            return []
    out = []
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            code = pure.seg_classify(xs[a], ys[a], xs[b], ys[b],
                                     xs[c], ys[c], xs[d], ys[d])
            if code >= SegRelation.PROPER_CROSSING:
                out.append(Violation(SegRelation(code).name.lower().replace("_", "-"),
                                     edge=edges[i], other_edge=edges[j]))
    for e in edges:
        a, b = e
        for p in range(n):
            if p != a and p != b and \
                    pure.point_on_segment(xs[p], ys[p], xs[a], ys[a], xs[b], ys[b]) == 2:
                out.append(Violation("vertex-on-edge", edge=e, vertex=p))
    return out


def validate_drawing2(graph, positions) -> DrawingReport:
    """Check a straight-line plane drawing for crossing-freeness.

    Violations: coincident vertices, any edge pair that properly crosses,
    overlaps collinearly or stabs an endpoint into an interior, and any
    vertex interior to a non-incident edge.
    """
    _require_positions(graph, positions)
    pts = [positions[v] for v in range(graph.n)]
    violations = _coincident_violations(pts)
    edges = sorted(graph.edges)
    xs, ys = _scaled_coords(pts)
    violations += _validate_segments(graph.n, edges, xs, ys)
    return DrawingReport(not violations, tuple(violations))


def cover_by_lines(points, lines) -> bool:
    """True if every point satisfies some line equation exactly."""
    return all(any(line.contains(p) for p in (pt,) for line in lines)
               for pt in points)


# -- two-plane drawings ----------------------------------------------------

def _drop_axis(normal: Point3) -> int:
    for k, comp in enumerate(normal):
        if comp != 0:
            return k
    raise DegenerateInputError("zero normal")


def _project(p: Point3, drop: int) -> Point2:
    kept = [c for k, c in enumerate(p) if k != drop]
    return Point2(kept[0], kept[1])


def _spine_param(p: Point3, base: Point3, direction: Point3) -> Fraction:
    comps = [(abs(direction.x), 0), (abs(direction.y), 1), (abs(direction.z), 2)]
    _, k = max(comps)
    return (p[k] - base[k]) / direction[k]


def segment_spine_trace(p: Point3, q: Point3, base: Point3, direction: Point3,
                 plane: Plane3):
    """Closed parameter interval where segment pq meets the spine, or None.

    The segment must lie in the given plane, which also contains the spine.
    """
    drop = _drop_axis(plane.normal())
    a = _project(p, drop)
    b = _project(q, drop)
    s0 = _project(base, drop)
    d2 = _project(Point3(base.x + direction.x, base.y + direction.y,
                         base.z + direction.z), drop)
    # Signed position of a point relative to the projected spine line.
    def side(pt: Point2) -> Fraction:
        return ((d2.x - s0.x) * (pt.y - s0.y)
                - (d2.y - s0.y) * (pt.x - s0.x))

    sa, sb = side(a), side(b)
    if sa == 0 and sb == 0:
        ta = _spine_param(p, base, direction)
        tb = _spine_param(q, base, direction)
        return (min(ta, tb), max(ta, tb))
    if sa == 0:
        t = _spine_param(p, base, direction)
        return (t, t)
    if sb == 0:
        t = _spine_param(q, base, direction)
        return (t, t)
    if (sa > 0) == (sb > 0):
        return None
    frac = sa / (sa - sb)
    hit = Point3(p.x + (q.x - p.x) * frac,
                 p.y + (q.y - p.y) * frac,
                 p.z + (q.z - p.z) * frac)
    t = _spine_param(hit, base, direction)
    return (t, t)


def validate_drawing3(graph, positions, planes, edge_plane) -> DrawingReport:
    """Check a two-plane straight-line 3D drawing.

    Every edge must carry a plane assignment ("A", "B" or "both") with both
    endpoints exactly on the assigned plane(s). Within each plane the usual
    2D rules apply after an exact coordinate projection; edges of different
    planes may only touch on the spine, and only at a shared endpoint.
    """
    _require_positions(graph, positions)
    plane_a, plane_b = planes
    if plane_a == plane_b:
        raise DegenerateInputError("the two planes coincide")
    base, direction = plane_intersection(plane_a, plane_b)  # raises if parallel

    violations: list[Violation] = []
    pts = [positions[v] for v in range(graph.n)]
    violations += _coincident_violations(pts)

    edges = sorted(graph.edges)
    for e in edges:
        tag = edge_plane.get(e)
        if tag not in ("A", "B", SPINE_TAG):
            violations.append(Violation("unassigned-edge", edge=e))
            continue
        needed = {"A": (plane_a,), "B": (plane_b,),
                  SPINE_TAG: (plane_a, plane_b)}[tag]
        for pl in needed:
            for v in e:
                if not pl.contains(positions[v]):
                    violations.append(Violation("off-plane", edge=e, vertex=v,
                                                note=f"assigned {tag}"))

    if violations:
        return DrawingReport(False, tuple(violations))

    for name, plane in (("A", plane_a), ("B", plane_b)):
        in_plane = [e for e in edges if edge_plane[e] in (name, SPINE_TAG)]
        members = [v for v in range(graph.n) if plane.contains(positions[v])]
        index = {v: i for i, v in enumerate(members)}
        drop = _drop_axis(plane.normal())
        proj = [_project(positions[v], drop) for v in members]
        xs, ys = _scaled_coords(proj)
        local_edges = [(index[u], index[v]) for u, v in in_plane]
        for viol in _validate_segments(len(members), local_edges, xs, ys):
            remap = lambda le: (members[le[0]], members[le[1]]) if le else None
            violations.append(Violation(viol.kind,
                                        edge=remap(viol.edge),
                                        other_edge=remap(viol.other_edge),
                                        vertex=(members[viol.vertex]
                                                if viol.vertex is not None else None),
                                        note=f"plane {name}"))

    a_only = [e for e in edges if edge_plane[e] == "A"]
    b_only = [e for e in edges if edge_plane[e] == "B"]
    traces_b = []
    for f in b_only:
        tr = segment_spine_trace(positions[f[0]], positions[f[1]], base, direction, plane_b)
        if tr is not None:
            traces_b.append((f, tr))
    for e in a_only:
        tr_e = segment_spine_trace(positions[e[0]], positions[e[1]], base, direction, plane_a)
        if tr_e is None:
            continue
        for f, tr_f in traces_b:
            lo = max(tr_e[0], tr_f[0])
            hi = min(tr_e[1], tr_f[1])
            if lo > hi:
                continue
            shared = set(e) & set(f)
            if lo == hi and any(
                    plane_a.contains(positions[w]) and plane_b.contains(positions[w])
                    and _spine_param(positions[w], base, direction) == lo
                    for w in shared):
                continue
            violations.append(Violation("spine-conflict", edge=e, other_edge=f))

    return DrawingReport(not violations, tuple(violations))
