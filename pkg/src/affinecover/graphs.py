"""Graph representation, special-graph generators and combinatorial checks.

All functions are pure: graphs go in, new graphs come out, nothing is
shared or mutated, so everything here is safe to call concurrently.

Role tags travel with every transformation because the reduction pipeline
must tell original vertices from gadget vertices when levels are
extracted from a drawing.
"""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import permutations

from .errors import CapacityError, DisconnectedGraphError, FormatError
from .geom import Point2, pt2, validate_drawing2

ROLE_ORIGINAL = "original"
ROLE_GADGET_MID = "gadgetMid"
ROLE_ANCHOR = "g0"
ROLE_PATH = "pathConnector"
ROLE_SPIRAL = "spiral"

ROLES = frozenset({ROLE_ORIGINAL, ROLE_GADGET_MID, ROLE_ANCHOR, ROLE_PATH, ROLE_SPIRAL})

MAX_STACK_DEPTH = 12
MAX_LEVEL_SEARCH = 12


def edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass
class Graph:
    n: int
    edges: frozenset
    roles: dict
    distinguished: dict

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    @property
    def m(self) -> int:
        return len(self.edges)


def make_graph(n, edges_iter, roles=None, distinguished=None) -> Graph:
    es = set()
    for u, v in edges_iter:
        if u == v:
            raise FormatError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for n={n}")
        es.add(edge(u, v))
    roles = dict(roles) if roles else {}
    for v in range(n):
        roles.setdefault(v, ROLE_ORIGINAL)
    bad = set(roles.values()) - ROLES
    if bad:
        raise FormatError(f"unknown role tags {sorted(bad)}")
    return Graph(n, frozenset(es), roles, dict(distinguished or {}))


# -- elementary generators ---------------------------------------------------

def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return make_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n <= 1:
        return make_graph(n, [])
    if n == 2:
        return make_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return make_graph(n, edges)


# -- basic structure queries -------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    adj = g.adjacency()
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def two_coloring(g: Graph):
    """A proper 2-coloring as a list, or None if an odd cycle exists."""
    adj = g.adjacency()
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def diameter(g: Graph) -> int:
    """Largest shortest-path distance; requires a connected graph."""
    if g.n == 0:
        return 0
    adj = g.adjacency()
    best = 0
    for s in range(g.n):
        dist = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        if min(dist) < 0:
            raise DisconnectedGraphError(
                "diameter of a disconnected graph; the reduction needs a connected input")
        best = max(best, max(dist))
    return best


def is_linear_forest(g: Graph) -> bool:
    """True when the graph is a disjoint union of paths."""
    if any(g.degree(v) > 2 for v in range(g.n)):
        return False
    return g.m == g.n - len(connected_components(g))


# -- stacked triangulations --------------------------------------------------

@dataclass
class FaceNode:
    corners: tuple[int, int, int]
    stacked: int | None = None
    children: list = field(default_factory=list)


@dataclass
class FaceTree:
    root: FaceNode
    depth: int

    def generations(self) -> list[list[FaceNode]]:
        """Face nodes grouped by generation, starting with the root."""
        out = [[self.root]]
        while out[-1] and out[-1][0].children:
            out.append([c for node in out[-1] for c in node.children])
        return out

    def frontier(self) -> list[FaceNode]:
        return self.generations()[-1]

    def stacked_count(self) -> int:
        count = 0
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.stacked is not None:
                count += 1
            stack.extend(node.children)
        return count


def stacked_triangulation(depth: int) -> tuple[Graph, FaceTree]:
    """Triangulation obtained by stacking into every bounded face, repeatedly.

    Starts from a triangle; each round adds one vertex inside every
    frontier face. Vertex numbering is breadth first over faces, so
    outputs are deterministic.
    """
    if depth < 0:
        raise CapacityError("depth must be nonnegative")
    if depth > MAX_STACK_DEPTH:
        raise CapacityError(f"depth {depth} exceeds limit {MAX_STACK_DEPTH}")
    n = 3
    edges = {(0, 1), (0, 2), (1, 2)}
    root = FaceNode((0, 1, 2))
    frontier = [root]
    for _ in range(depth):
        nxt = []
        for face in frontier:
            a, b, c = face.corners
            x = n
            n += 1
            edges |= {edge(a, x), edge(b, x), edge(c, x)}
            face.stacked = x
            face.children = [FaceNode((a, b, x)), FaceNode((a, c, x)), FaceNode((b, c, x))]
            nxt.extend(face.children)
        frontier = nxt
    g = make_graph(n, edges,
                   distinguished={"corner_a": 0, "corner_b": 1, "corner_c": 2})
    return g, FaceTree(root, depth)


# -- gadget substitution and the anchor gadget --------------------------------

def substitute_k24(g: Graph) -> Graph:
    """Replace every edge uv by a complete bipartite gadget K_{2,4}.

    u and v become the 2-side; four fresh mid vertices form the 4-side.
    Existing roles are kept, mids are tagged gadgetMid. The mids of the
    edge at sorted position i are n + 4i .. n + 4i + 3.
    """
    new_edges = []
    roles = dict(g.roles)
    nxt = g.n
    for u, v in sorted(g.edges):
        for k in range(4):
            mid = nxt + k
            roles[mid] = ROLE_GADGET_MID
            new_edges.append((u, mid))
            new_edges.append((v, mid))
        nxt += 4
    return make_graph(nxt, new_edges, roles, dict(g.distinguished))


def gadget_mid_ids(g: Graph, e: tuple[int, int]) -> tuple[int, int, int, int]:
    """Mid vertices that substitute_k24 created for edge e of g."""
    idx = sorted(g.edges).index(edge(*e))
    base = g.n + 4 * idx
    return (base, base + 1, base + 2, base + 3)


def anchor_gadget() -> Graph:
    """Two K4 copies sharing exactly one edge.

    Vertices 0 and 1 are the shared (distinguished) pair; 2 and 3 complete
    the first K4, 4 and 5 the second. 11 edges total.
    """
    quads = [(0, 1, 2, 3), (0, 1, 4, 5)]
    edges = set()
    for quad in quads:
        for i in range(4):
            for j in range(i + 1, 4):
                edges.add(edge(quad[i], quad[j]))
    roles = {v: ROLE_ANCHOR for v in range(6)}
    return make_graph(6, edges, roles,
                      {"shared_a": 0, "shared_b": 1})


# -- the triangulated spiral ---------------------------------------------------

SPIRAL_RAYS = ((1, 0), (0, 1), (-1, 0), (0, -1))  # +x, +y, -x, -y


def _spiral_ids(levels: int):
    """Vertex ids: start vertex 0, then inner/outer pair per ray crossing."""
    alpha = {k: 2 * k - 1 for k in range(1, levels + 4)}
    beta = {k: 2 * k for k in range(1, levels + 4)}
    return alpha, beta


def spiral_edges(levels: int) -> list[tuple[int, int]]:
    alpha, beta = _spiral_ids(levels)
    es = [(0, alpha[1]), (0, beta[1]), (alpha[1], beta[1])]
    for k in range(1, levels + 3):
        es.append((alpha[k], alpha[k + 1]))
        es.append((beta[k], beta[k + 1]))
        es.append((alpha[k + 1], beta[k + 1]))
        es.append((alpha[k], beta[k + 1]))
    # The strip closes onto the outermost vertex of the previous turn.
    es.append((alpha[levels + 3], beta[levels]))
    es.append((beta[levels + 3], beta[levels]))
    return es


def make_spiral(levels: int) -> tuple[Graph, tuple[int, ...]]:
    """Triangulated spiral strip whose open inner face has degree 2*(levels+2).

    The strip starts at a single vertex, crosses the four axis rays
    levels+4 times while winding outward, and its last crossing is the
    outer vertex of the previous turn, which seals the winding gap and
    leaves a quadrilateral outer face. The gap face is returned as its
    boundary cycle.
    """
    if levels < 1:
        raise CapacityError("a spiral needs at least one level")
    alpha, beta = _spiral_ids(levels)
    n = 2 * levels + 7
    roles = {v: ROLE_SPIRAL for v in range(n)}
    g = make_graph(n, spiral_edges(levels), roles, {"spiral_start": 0})
    inner = [0]
    inner += [beta[j] for j in range(1, levels + 1)]
    inner += [alpha[k] for k in range(levels + 3, 0, -1)]
    return g, tuple(inner)


def spiral_positions(levels: int) -> dict[int, Point2]:
    """Canonical exact drawing of the spiral on the two coordinate axes.

    Crossing k sits on ray k mod 4 with the inner vertex at radius
    4**(k+1) and the outer at 2*4**(k+1); the start vertex sits at
    radius 4 on the positive x ray. Gap j is then the open radial
    interval between crossing j-1 and crossing j+3 on their shared ray.
    """
    alpha, beta = _spiral_ids(levels)
    pos = {0: pt2(4, 0)}
    for k in range(1, levels + 4):
        dx, dy = SPIRAL_RAYS[k % 4]
        r_in = 4 ** (k + 1)
        pos[alpha[k]] = pt2(dx * r_in, dy * r_in)
        pos[beta[k]] = pt2(dx * 2 * r_in, dy * 2 * r_in)
    return pos


def spiral_embedding(levels: int) -> dict[int, tuple[int, ...]]:
    """Rotation system of the canonical spiral drawing."""
    g, _ = make_spiral(levels)
    return rotation_system(g, spiral_positions(levels))


def spiral_level_walls(levels: int) -> list[tuple[int, int, int]]:
    """Per level j (1-based): (ray index, inner wall id, outer wall id).

    The open radial interval between the two wall vertices on that ray is
    where level-j content is drawn.
    """
    alpha, beta = _spiral_ids(levels)
    walls = []
    for j in range(1, levels + 1):
        inner_id = 0 if j == 1 else beta[j - 1]
        walls.append(((j - 1) % 4, inner_id, alpha[j + 3]))
    return walls


# -- combinatorial embeddings -------------------------------------------------

def _quadrant(dx, dy) -> int:
    if dx > 0 and dy >= 0:
        return 0
    if dx <= 0 and dy > 0:
        return 1
    if dx < 0 and dy <= 0:
        return 2
    return 3


def rotation_system(g: Graph, positions) -> dict[int, tuple[int, ...]]:
    """Counterclockwise neighbor order around each vertex of a drawing."""
    adj = g.adjacency()
    rot = {}
    for v in range(g.n):
        pv = positions[v]

        def cmp(a, b):
            da = (positions[a].x - pv.x, positions[a].y - pv.y)
            db = (positions[b].x - pv.x, positions[b].y - pv.y)
            qa, qb = _quadrant(*da), _quadrant(*db)
            if qa != qb:
                return -1 if qa < qb else 1
            cross = da[0] * db[1] - da[1] * db[0]
            if cross > 0:
                return -1
            if cross < 0:
                return 1
            return -1 if a < b else (1 if a > b else 0)

        rot[v] = tuple(sorted(sorted(adj[v]), key=cmp_to_key(cmp)))
    return rot


def faces_from_rotation(g: Graph, rot) -> list[tuple[int, ...]]:
    """All face boundary walks of the embedding given by a rotation system."""
    darts = {(u, v) for u, v in g.edges} | {(v, u) for u, v in g.edges}
    index = {v: {w: i for i, w in enumerate(rot[v])} for v in rot}
    faces = []
    while darts:
        u0, v0 = min(darts)
        walk = []
        u, v = u0, v0
        while True:
            walk.append(u)
            darts.discard((u, v))
            nbrs = rot[v]
            i = index[v][u]
            w = nbrs[(i - 1) % len(nbrs)]
            u, v = v, w
            if (u, v) == (u0, v0):
                break
        faces.append(tuple(walk))
    return faces


def outer_face(faces, positions) -> tuple[int, ...]:
    """The unbounded face of an embedded drawing.

    With the tracing convention of faces_from_rotation, bounded faces come
    out with positive signed area and the outer face alone is negative.
    """
    negative = []
    for walk in faces:
        s = Fraction(0)
        for i in range(len(walk)):
            p = positions[walk[i]]
            q = positions[walk[(i + 1) % len(walk)]]
            s += p.x * q.y - q.x * p.y
        if s < 0:
            negative.append(walk)
    if len(negative) != 1:
        raise FormatError("embedding does not have a unique unbounded face")
    return negative[0]


def same_cycle(a, b) -> bool:
    """Equality of two cyclic sequences up to rotation and reflection."""
    if len(a) != len(b):
        return False
    doubled = tuple(b) + tuple(b)
    rev = tuple(reversed(b)) + tuple(reversed(b))
    a = tuple(a)
    return any(doubled[i:i + len(a)] == a for i in range(len(b))) or \
        any(rev[i:i + len(a)] == a for i in range(len(b)))


# -- leveled planarity (exhaustive, desk scale) --------------------------------

@dataclass
class LevelAssignment:
    level_of: dict[int, int]
    order_within: dict[int, tuple[int, ...]]

    @property
    def m(self) -> int:
        return max(self.level_of.values()) if self.level_of else 0

    def position(self, v: int) -> int:
        return self.order_within[self.level_of[v]].index(v)


def leveling_drawing(lev: LevelAssignment) -> dict[int, Point2]:
    """Integer-coordinate drawing: level i on the vertical line x = i."""
    pos = {}
    for i, order in lev.order_within.items():
        for y, v in enumerate(order):
            pos[v] = pt2(i, y)
    return pos


def validate_leveling(g: Graph, lev: LevelAssignment) -> tuple[bool, list[str]]:
    """Check a leveling witness: structure plus an exact crossing-free test."""
    problems = []
    if set(lev.level_of) != set(range(g.n)):
        problems.append("level map does not cover the vertex set")
        return False, problems
    m = lev.m
    for i in range(1, m + 1):
        members = [v for v in range(g.n) if lev.level_of[v] == i]
        if not members:
            problems.append(f"level {i} is empty")
        if sorted(lev.order_within.get(i, ())) != sorted(members):
            problems.append(f"order of level {i} is not a permutation of the level")
    for u, v in sorted(g.edges):
        if abs(lev.level_of[u] - lev.level_of[v]) != 1:
            problems.append(f"edge ({u}, {v}) does not join consecutive levels")
    if problems:
        return False, problems
    report = validate_drawing2(g, leveling_drawing(lev))
    if not report.ok:
        problems.extend(str(v) for v in report.violations)
    return not problems, problems


def _component_levelings(g: Graph, comp: list[int], max_levels: int):
    """Proper level maps of one component, min level 1, at most max_levels."""
    adj = g.adjacency()
    order = []
    seen = set()
    queue = deque([min(comp)])
    seen.add(min(comp))
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in sorted(adj[v]):
            if w not in seen and w in set(comp):
                seen.add(w)
                queue.append(w)

    found = set()

    def rec(i: int, lev: dict):
        if i == len(order):
            lo = min(lev.values())
            shifted = {v: l - lo + 1 for v, l in lev.items()}
            if max(shifted.values()) <= max_levels:
                found.add(tuple(sorted(shifted.items())))
            return
        v = order[i]
        placed = [lev[u] for u in adj[v] if u in lev]
        if not placed:
            options = [0]
        else:
            options = [l for l in {placed[0] - 1, placed[0] + 1}
                       if all(abs(l - q) == 1 for q in placed)]
            # Bounding the spread keeps the recursion finite and complete:
            # shifting cannot rescue a spread wider than max_levels.
            options = [l for l in options
                       if max(max(lev.values(), default=l), l)
                       - min(min(lev.values(), default=l), l) < max_levels]
        for l in sorted(options):
            lev[v] = l
            rec(i + 1, lev)
            del lev[v]

    rec(0, {})
    keyed = sorted(found, key=lambda t: (max(l for _, l in t), t))
    return [dict(t) for t in keyed]


def _channel_ok(prev_pos: dict, cur_pos: dict, edges) -> bool:
    pairs = [(prev_pos[u], cur_pos[v]) for u, v in edges]
    for i in range(len(pairs)):
        p1, q1 = pairs[i]
        for j in range(i + 1, len(pairs)):
            p2, q2 = pairs[j]
            if (p1 - p2) * (q1 - q2) < 0:
                return False
    return True


def _component_orders(edges, level_of: dict, require_last=None):
    """First per-level orders (lexicographic) giving a crossing-free drawing."""
    m = max(level_of.values())
    by_level = {i: sorted(v for v in level_of if level_of[v] == i)
                for i in range(1, m + 1)}
    channel = {i: [] for i in range(2, m + 1)}
    for u, v in sorted(edges):
        lo, hi = sorted((u, v), key=lambda w: level_of[w])
        channel[level_of[hi]].append((lo, hi))

    orders: dict[int, tuple[int, ...]] = {}

    def rec(i: int):
        if i > m:
            return True
        for perm in permutations(by_level[i]):
            if require_last is not None and require_last in by_level[i] \
                    and perm[-1] != require_last:
                continue
            cur = {v: p for p, v in enumerate(perm)}
            if i > 1:
                prev = {v: p for p, v in enumerate(orders[i - 1])}
                if not _channel_ok(prev, cur, channel[i]):
                    continue
            orders[i] = perm
            if rec(i + 1):
                return True
            del orders[i]
        return False

    if rec(1):
        return dict(orders)
    return None


def leveled_planar_search(g: Graph, max_levels: int, *,
                          require_last: int | None = None) -> LevelAssignment | None:
    """Exhaustive search for a crossing-free leveled drawing witness.

    Returns the first witness in a fixed deterministic order (fewest
    levels per component first, then lexicographic), or None when no
    proper leveling with at most max_levels levels admits one. With
    require_last set, only witnesses placing that vertex last in its
    level order are produced.
    """
    if g.n > MAX_LEVEL_SEARCH:
        raise CapacityError(
            f"{g.n} vertices exceeds the exhaustive leveling limit {MAX_LEVEL_SEARCH}")
    if max_levels < 1:
        return None
    if g.n == 0:
        return LevelAssignment({}, {})

    comps = connected_components(g)
    level_of: dict[int, int] = {}
    comp_orders = []
    for comp in sorted(comps, key=min):
        got = None
        for cand in _component_levelings(g, comp, max_levels):
            sub_edges = [e for e in g.edges if e[0] in cand and e[1] in cand]
            need = require_last if require_last in cand else None
            orders = _component_orders(sub_edges, cand, need)
            if orders is not None:
                got = (cand, orders)
                break
        if got is None:
            return None
        level_of.update(got[0])
        comp_orders.append(got[1])

    m = max(level_of.values())
    merged: dict[int, list[int]] = {i: [] for i in range(1, m + 1)}
    for orders in comp_orders:
        for i, perm in orders.items():
            merged[i].extend(perm)
    lev = LevelAssignment(level_of, {i: tuple(vs) for i, vs in merged.items()})
    ok, _ = validate_leveling(g, lev)
    if not ok:  # pragma: no cover - the channel test matches the exact check
        return None
    return lev


# -- graph text format ---------------------------------------------------------

def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    for v in range(g.n):
        lines.append(f"# role {v} {g.roles[v]}")
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty graph file")
    roles = {}
    header, *rest = rows
    try:
        n, m = map(int, header.split())
    except ValueError as exc:
        raise FormatError(f"bad header {header!r}") from exc
    edges = []
    for ln in rest:
        if ln.startswith("#"):
            parts = ln[1:].split()
            if len(parts) == 3 and parts[0] == "role":
                roles[int(parts[1])] = parts[2]
            continue
        u, v = map(int, ln.split())
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, file has {len(edges)}")
    return make_graph(n, edges, roles)


def write_levels(lev: LevelAssignment) -> str:
    lines = [f"levels {lev.m}"]
    for i in range(1, lev.m + 1):
        lines.append(" ".join([str(i)] + [str(v) for v in lev.order_within[i]]))
    return "\n".join(lines) + "\n"


def read_levels(text: str) -> LevelAssignment:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows or not rows[0].startswith("levels"):
        raise FormatError("levels file must start with 'levels m'")
    m = int(rows[0].split()[1])
    level_of = {}
    order = {}
    for ln in rows[1:]:
        parts = [int(t) for t in ln.split()]
        i, vs = parts[0], parts[1:]
        order[i] = tuple(vs)
        for v in vs:
            level_of[v] = i
    if sorted(order) != list(range(1, m + 1)):
        raise FormatError("levels file does not list levels 1..m")
    return LevelAssignment(level_of, order)
