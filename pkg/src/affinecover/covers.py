"""Certificate search for small vertex line covers.

A certificate is a crossing-free straight-line drawing together with an
explicit line set containing every vertex; it is verified on
construction, so holding a Certificate object is itself the proof of the
upper bound. Searches are exhaustive over a documented finite space:
"not found" only ever means "not found in this space", except for the
two-parallel-lines model, where the space is order-complete and absence
is a proof.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import CapacityError, DegenerateInputError
from .geom import (
    Line2,
    Point2,
    X_AXIS,
    Y_AXIS,
    cover_by_lines,
    min_line_cover,
    pt2,
    validate_drawing2,
)
from .graphs import Graph, is_linear_forest, stacked_triangulation
from .kernels import impl

DEFAULT_SLOPES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
                  Fraction(1, 2), Fraction(-1, 2))

# Exhaustive-search vertex limits per line count; beyond these the space
# explodes and the honest answer is a capacity error.
VERTEX_CAPS = {1: 12, 2: 10, 3: 8}
FALLBACK_CAP = 6

TWO_PARALLEL_CAP = 10
MAX_STACKED_DRAW = 5


@dataclass(frozen=True)
class SearchSpace:
    """Finite candidate space for drawings on few lines.

    Concurrent mode uses lines through the origin: the two coordinate
    axes first, further lines with slopes drawn from the menu. Parallel
    mode uses horizontal lines at the given offsets. Vertex positions on
    a line are parameterized by t in {-radius..-1, 1..radius}.
    """

    mode: str = "concurrent"
    radius: int = 4
    slopes: tuple = DEFAULT_SLOPES
    offsets: tuple = (0, 1, 2, 3, 4, 5)
    symmetry_reduction: bool = False

    def __post_init__(self):
        if self.mode not in ("concurrent", "parallel"):
            raise DegenerateInputError(f"unknown search mode {self.mode!r}")
        if self.radius < 1:
            raise DegenerateInputError("radius must be at least 1")

    def menu(self) -> tuple[Fraction, ...]:
        r = self.radius
        return tuple(Fraction(t) for t in list(range(-r, 0)) + list(range(1, r + 1)))


DEFAULT_SPACE = SearchSpace()


@dataclass(frozen=True)
class Certificate:
    """Verified witness: drawing plus covering lines.

    Construction re-runs both checks; an unverifiable certificate cannot
    exist.
    """

    graph: Graph
    positions: dict
    lines: tuple

    def __post_init__(self):
        report = validate_drawing2(self.graph, self.positions)
        if not report.ok:
            raise DegenerateInputError(f"certificate drawing invalid: {report}")
        pts = [self.positions[v] for v in range(self.graph.n)]
        if not cover_by_lines(pts, self.lines):
            raise DegenerateInputError("certificate lines do not cover all vertices")

    @property
    def k(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class CoverInterval:
    lower: int
    upper: int | None
    certificate: Certificate | None = None


# -- line families -----------------------------------------------------------

def _concurrent_line(slope: Fraction) -> Line2:
    # y = slope * x through the origin.
    return Line2(Fraction(slope), Fraction(-1), Fraction(0))


def _line_sets(k: int, space: SearchSpace):
    """Candidate line tuples with, per line, a point parameterization."""
    if space.mode == "concurrent":
        axes = [(X_AXIS, (Fraction(1), Fraction(0), Fraction(0), Fraction(0))),
                (Y_AXIS, (Fraction(0), Fraction(1), Fraction(0), Fraction(0)))]
        if k <= 2:
            yield axes[:k]
            return
        extra = k - 2
        if extra > len(space.slopes):
            return
        for combo in combinations(space.slopes, extra):
            lines = list(axes)
            for s in combo:
                lines.append((_concurrent_line(s),
                              (Fraction(1), Fraction(s), Fraction(0), Fraction(0))))
            yield lines
    else:
        nonzero = tuple(o for o in space.offsets if o != 0)
        if k - 1 > len(nonzero):
            return
        for combo in combinations(nonzero, k - 1):
            lines = [(Line2.horizontal(0),
                      (Fraction(1), Fraction(0), Fraction(0), Fraction(0)))]
            for off in sorted(combo):
                lines.append((Line2.horizontal(off),
                              (Fraction(1), Fraction(0), Fraction(0), Fraction(off))))
            yield lines


def _point_on(param, t: Fraction) -> Point2:
    dx, dy, bx, by = param
    return Point2(bx + dx * t, by + dy * t)


# -- generic placement search --------------------------------------------------

def _search_order(g: Graph) -> list[int]:
    """BFS order from the densest vertex of each component: places
    constrained vertices early so edge checks prune."""
    adj = g.adjacency()
    seen = [False] * g.n
    order = []
    roots = sorted(range(g.n), key=lambda v: (-len(adj[v]), v))
    for root in roots:
        if seen[root]:
            continue
        queue = [root]
        seen[root] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(adj[v], key=lambda w: (-len(adj[w]), w)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _try_line_set(g: Graph, lines, space: SearchSpace):
    """First valid placement of all vertices on the given lines, or None."""
    menu = space.menu()
    options = []
    coords: list[tuple[Fraction, Fraction]] = []
    for li, (_, param) in enumerate(lines):
        for t in menu:
            p = _point_on(param, t)
            options.append((li, len(coords), t > 0))
            coords.append((p.x, p.y))
    scale = lcm(*(c.denominator for xy in coords for c in xy))
    int_coords = [(int(x * scale), int(y * scale)) for x, y in coords]

    order = _search_order(g)
    adj = g.adjacency()
    n = g.n
    xs = array("q", [0] * n)
    ys = array("q", [0] * n)
    placed = array("B", [0] * n)
    eu = array("i", [])
    ev = array("i", [])
    assignment: dict[int, int] = {}
    used: set[tuple[int, int]] = set()

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for li, ci, positive in options:
            # Point negation fixes every candidate line, so the first
            # placed vertex may take a positive parameter without loss.
            if space.symmetry_reduction and i == 0 and not positive:
                continue
            x, y = int_coords[ci]
            if (x, y) in used:
                continue
            xs[v] = x
            ys[v] = y
            # The new vertex may not sit inside an existing edge.
            hit = False
            for j in range(len(eu)):
                a, b = eu[j], ev[j]
                if impl.point_on_segment(x, y, xs[a], ys[a], xs[b], ys[b]) == 2:
                    hit = True
                    break
            if hit:
                continue
            new_edges = [w for w in adj[v] if placed[w]]
            placed[v] = 1
            ok = True
            added = 0
            for w in new_edges:
                if impl.segment_clear(xs, ys, placed, eu, ev, v, w):
                    eu.append(v)
                    ev.append(w)
                    added += 1
                else:
                    ok = False
                    break
            if ok:
                used.add((x, y))
                assignment[v] = ci
                if rec(i + 1):
                    return True
                used.discard((x, y))
                del assignment[v]
            for _ in range(added):
                eu.pop()
                ev.pop()
            placed[v] = 0
        return False

    if rec(0):
        return {v: Point2(*coords[ci]) for v, ci in assignment.items()}
    return None


def search_certificate(g: Graph, k: int, space: SearchSpace = DEFAULT_SPACE, *,
                       max_vertices: int | None = None) -> Certificate | None:
    """First certificate (in search order) with at most k lines, or None.

    Line counts are tried in increasing order, line sets and placements
    lexicographically, so the result is deterministic. None means: no
    certificate inside the given finite space, never a lower bound.
    """
    for kk in range(1, k + 1):
        cap = max_vertices if max_vertices is not None \
            else VERTEX_CAPS.get(kk, FALLBACK_CAP)
        if g.n > cap:
            raise CapacityError(
                f"{g.n} vertices exceeds the k={kk} search limit {cap} "
                f"(documented caps: {VERTEX_CAPS}, else {FALLBACK_CAP})")
        for lines in _line_sets(kk, space):
            pos = _try_line_set(g, lines, space)
            if pos is not None:
                return Certificate(g, pos, tuple(sorted(l for l, _ in lines)))
    return None


def cover_interval(g: Graph, k_max: int, space: SearchSpace = DEFAULT_SPACE, *,
                   max_vertices: int | None = None) -> CoverInterval:
    """Certified bracket for the vertex line cover number.

    The lower bound uses only the linear-forest criterion (1 exactly for
    disjoint unions of paths, else 2); the upper bound is the smallest
    line count for which the search finds a certificate, if any.
    """
    lower = 1 if is_linear_forest(g) else 2
    cert = search_certificate(g, k_max, space, max_vertices=max_vertices)
    if cert is None:
        return CoverInterval(lower, None, None)
    return CoverInterval(lower, cert.k, cert)


# -- two parallel lines: order-complete decision -------------------------------

def two_parallel_lines(g: Graph) -> Certificate | None:
    """Drawing on the lines y=0 and y=1, or None after exhausting all orders.

    On two parallel lines, validity depends only on the split and the two
    left-to-right orders: same-line edges must join consecutive vertices
    and cross edges must be mutually non-inverted. The search inserts
    vertices in id order at every position of either line, which
    enumerates each (split, order, order) exactly once, so None is a
    proof for this model.
    """
    if g.n > TWO_PARALLEL_CAP:
        raise CapacityError(
            f"{g.n} vertices exceeds the two-line exhaustive limit {TWO_PARALLEL_CAP}")
    adj = g.adjacency()
    active = [v for v in range(g.n) if adj[v]]
    isolated = [v for v in range(g.n) if not adj[v]]
    rows: tuple[list[int], list[int]] = ([], [])

    def cross_ok(v, side, vpos) -> bool:
        # Called after v is inserted at position vpos of its row.
        other = rows[1 - side]
        for w in adj[v]:
            if w in other:
                wpos = other.index(w)
                for apos, a in enumerate(rows[side]):
                    if a == v:
                        continue
                    for b in adj[a]:
                        if b == w or b not in other:
                            continue
                        j = other.index(b)
                        if (apos - vpos) * (j - wpos) < 0:
                            return False
        return True

    def rec(i: int):
        if i == len(active):
            return True
        v = active[i]
        for side in (0, 1):
            row = rows[side]
            for p in range(len(row) + 1):
                if 0 < p < len(row) and (min(row[p - 1], row[p]), max(row[p - 1], row[p])) in g.edges:
                    continue  # would land inside a same-line edge
                same = [w for w in adj[v] if w in row]
                if any(w not in (row[p - 1] if p > 0 else None,
                                 row[p] if p < len(row) else None) for w in same):
                    continue
                row.insert(p, v)
                if cross_ok(v, side, p) and rec(i + 1):
                    return True
                row.pop(p)
        return False

    if not rec(0):
        return None
    rows[0].extend(isolated)
    pos = {}
    for y, row in ((0, rows[0]), (1, rows[1])):
        for x, v in enumerate(row):
            pos[v] = pt2(x + 1, y)
    return Certificate(g, pos, (Line2.horizontal(0), Line2.horizontal(1)))


# -- drawing stacked triangulations on few lines --------------------------------

@dataclass(frozen=True)
class StackedDrawing:
    certificate: Certificate
    achieved: int
    target: int

    @property
    def meets_target(self) -> bool:
        return self.achieved <= self.target


def _param_of(line: Line2, p: Point2) -> Fraction:
    d = line.direction()
    b = line.base_point()
    if abs(d.x) >= abs(d.y):
        return (p.x - b.x) / d.x
    return (p.y - b.y) / d.y


def _strictly_inside(p: Point2, tri) -> bool:
    signs = set()
    for i in range(3):
        a, b = tri[i], tri[(i + 1) % 3]
        v = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if v == 0:
            return False
        signs.add(v > 0)
    return len(signs) == 1


def _interior_chord(line: Line2, tri):
    """Open chord of the line inside the triangle, as the stack point and
    parameter interval, or None when the line misses the open interior."""
    ts = []
    vals = [line.value(p) for p in tri]
    for i in range(3):
        p, vp = tri[i], vals[i]
        q, vq = tri[(i + 1) % 3], vals[(i + 1) % 3]
        if vp == 0:
            ts.append(_param_of(line, p))
        if vp * vq < 0:
            frac = vp / (vp - vq)
            hit = Point2(p.x + (q.x - p.x) * frac, p.y + (q.y - p.y) * frac)
            ts.append(_param_of(line, hit))
    ts = sorted(set(ts))
    if len(ts) < 2:
        return None
    t0, t1 = ts[0], ts[-1]
    mid_t = (t0 + t1) / 2
    d = line.direction()
    b = line.base_point()
    mid = Point2(b.x + d.x * mid_t, b.y + d.y * mid_t)
    if not _strictly_inside(mid, tri):
        return None
    return mid


def _centroid(tri) -> Point2:
    return Point2(sum(p.x for p in tri) / 3, sum(p.y for p in tri) / 3)


def _midline(tri) -> Line2:
    m1 = Point2((tri[0].x + tri[1].x) / 2, (tri[0].y + tri[1].y) / 2)
    m2 = Point2((tri[0].x + tri[2].x) / 2, (tri[0].y + tri[2].y) / 2)
    return Line2.through(m1, m2)


def stacked_line_drawing(depth: int) -> StackedDrawing:
    """Certificate drawing of the depth-d universal stacked triangulation.

    Greedy line reuse, generation by generation: a stack vertex goes to
    the midpoint of the first pooled line's chord through its face; faces
    no pooled line stabs trigger new lines chosen to stab as many needy
    faces at once as possible. The achieved line count is reported next
    to the d+1 target and the certificate is verified, never trusted.
    """
    if depth > MAX_STACKED_DRAW:
        raise CapacityError(f"depth {depth} exceeds drawing limit {MAX_STACKED_DRAW}")
    g, tree = stacked_triangulation(depth)
    s = Fraction(4 ** (depth + 2))
    pos = {0: Point2(-s, Fraction(0)), 1: Point2(s, Fraction(0)),
           2: Point2(Fraction(0), s)}
    pool: list[Line2] = [X_AXIS, Y_AXIS]

    for gen_nodes in tree.generations()[:-1]:
        faces = [node for node in gen_nodes if node.stacked is not None]
        if not faces:
            continue
        tris = {id(f): tuple(pos[c] for c in f.corners) for f in faces}

        def stabbed(face) -> bool:
            return any(_interior_chord(line, tris[id(face)]) is not None
                       for line in pool)

        needy = [f for f in faces if not stabbed(f)]
        while needy:
            cands = set()
            for f1, f2 in combinations(needy, 2):
                c1, c2 = _centroid(tris[id(f1)]), _centroid(tris[id(f2)])
                if c1 != c2:
                    cands.add(Line2.through(c1, c2))
            for f in needy:
                cands.add(_midline(tris[id(f)]))
            best = min(cands, key=lambda line: (
                -sum(1 for f in needy
                     if _interior_chord(line, tris[id(f)]) is not None),
                line))
            pool.append(best)
            needy = [f for f in needy if _interior_chord(best, tris[id(f)]) is None]

        for f in faces:
            for line in pool:
                mid = _interior_chord(line, tris[id(f)])
                if mid is not None:
                    pos[f.stacked] = mid
                    break
            else:  # pragma: no cover - the needy loop guarantees a stab
                raise AssertionError("face left unstabbed")

    cert = Certificate(g, pos, tuple(sorted(pool)))
    return StackedDrawing(cert, len(pool), depth + 1 if depth >= 1 else 2)
