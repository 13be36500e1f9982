"""Integer geometry predicates, pure Python.

Mirrors the compiled module's API exactly. Operates on plain Python ints,
so it doubles as the overflow-safe path when coordinates exceed the
compiled backend's 64-bit guard.

Segment relation codes (shared with the compiled backend):
    0 disjoint, 1 shared endpoint only, 2 proper crossing,
    3 endpoint in interior, 4 collinear overlap.
"""

BACKEND = "python"

DISJOINT = 0
SHARED_ENDPOINT = 1
PROPER_CROSSING = 2
ENDPOINT_IN_INTERIOR = 3
COLLINEAR_OVERLAP = 4


def orientation(ax, ay, bx, by, cx, cy):
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def point_on_segment(px, py, ax, ay, bx, by):
    """0 off the segment, 1 at an endpoint, 2 strictly inside."""
    if (px == ax and py == ay) or (px == bx and py == by):
        return 1
    if orientation(ax, ay, bx, by, px, py) != 0:
        return 0
    lox, hix = (ax, bx) if ax <= bx else (bx, ax)
    loy, hiy = (ay, by) if ay <= by else (by, ay)
    if lox <= px <= hix and loy <= py <= hiy:
        return 2
    return 0


def seg_classify(ax, ay, bx, by, cx, cy, dx, dy):
    o1 = orientation(ax, ay, bx, by, cx, cy)
    o2 = orientation(ax, ay, bx, by, dx, dy)
    if o1 == 0 and o2 == 0:
        # All four points on one line; compare intervals on the dominant axis
        # of AB (injective projection for points on that line).
        if abs(bx - ax) >= abs(by - ay):
            a0, b0, c0, d0 = ax, bx, cx, dx
        else:
            a0, b0, c0, d0 = ay, by, cy, dy
        lo1, hi1 = (a0, b0) if a0 <= b0 else (b0, a0)
        lo2, hi2 = (c0, d0) if c0 <= d0 else (d0, c0)
        lo = lo1 if lo1 >= lo2 else lo2
        hi = hi1 if hi1 <= hi2 else hi2
        if lo > hi:
            return DISJOINT
        if lo < hi:
            return COLLINEAR_OVERLAP
        # Touching in one point; on a shared line that point is an endpoint
        # of both segments.
        return SHARED_ENDPOINT
    o3 = orientation(cx, cy, dx, dy, ax, ay)
    o4 = orientation(cx, cy, dx, dy, bx, by)
    if ((ax == cx and ay == cy) or (ax == dx and ay == dy)
            or (bx == cx and by == cy) or (bx == dx and by == dy)):
        return SHARED_ENDPOINT
    if o1 == 0 and point_on_segment(cx, cy, ax, ay, bx, by) == 2:
        return ENDPOINT_IN_INTERIOR
    if o2 == 0 and point_on_segment(dx, dy, ax, ay, bx, by) == 2:
        return ENDPOINT_IN_INTERIOR
    if o3 == 0 and point_on_segment(ax, ay, cx, cy, dx, dy) == 2:
        return ENDPOINT_IN_INTERIOR
    if o4 == 0 and point_on_segment(bx, by, cx, cy, dx, dy) == 2:
        return ENDPOINT_IN_INTERIOR
    if o1 * o2 < 0 and o3 * o4 < 0:
        return PROPER_CROSSING
    return DISJOINT


def segment_clear(xs, ys, placed, eu, ev, a, b):
    """True if segment between vertices a and b conflicts with nothing placed.

    Conflicts: a relation >= PROPER_CROSSING against any edge (eu[i], ev[i]),
    or a placed vertex other than a, b strictly inside the segment.
    """
    ax, ay, bx, by = xs[a], ys[a], xs[b], ys[b]
    for i in range(len(eu)):
        u = eu[i]
        v = ev[i]
        if seg_classify(ax, ay, bx, by, xs[u], ys[u], xs[v], ys[v]) >= PROPER_CROSSING:
            return False
    for p in range(len(placed)):
        if placed[p] and p != a and p != b:
            if point_on_segment(xs[p], ys[p], ax, ay, bx, by) == 2:
                return False
    return True


def pair_scan(xs, ys, eu, ev):
    """Packed index i*m+j of the first conflicting edge pair, else -1."""
    m = len(eu)
    for i in range(m):
        a, b = eu[i], ev[i]
        ax, ay, bx, by = xs[a], ys[a], xs[b], ys[b]
        for j in range(i + 1, m):
            c, d = eu[j], ev[j]
            if seg_classify(ax, ay, bx, by, xs[c], ys[c], xs[d], ys[d]) >= PROPER_CROSSING:
                return i * m + j
    return -1


def vertex_scan(xs, ys, n, eu, ev):
    """Packed index e*n+p of the first vertex inside a non-incident edge, else -1."""
    m = len(eu)
    for e in range(m):
        a, b = eu[e], ev[e]
        ax, ay, bx, by = xs[a], ys[a], xs[b], ys[b]
        for p in range(n):
            if p == a or p == b:
                continue
            if point_on_segment(xs[p], ys[p], ax, ay, bx, by) == 2:
                return e * n + p
    return -1
