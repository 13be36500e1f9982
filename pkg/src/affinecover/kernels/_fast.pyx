# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer geometry predicates.

Same API and relation codes as the pure module. Coordinates must stay
below the caller-side guard (|coord| < 2**20) so that all intermediate
products fit in 64 bits.
"""

BACKEND = "c"

DISJOINT = 0
SHARED_ENDPOINT = 1
PROPER_CROSSING = 2
ENDPOINT_IN_INTERIOR = 3
COLLINEAR_OVERLAP = 4

cdef enum:
    C_DISJOINT = 0
    C_SHARED_ENDPOINT = 1
    C_PROPER_CROSSING = 2
    C_ENDPOINT_IN_INTERIOR = 3
    C_COLLINEAR_OVERLAP = 4


cdef inline int c_sign(long long v) nogil:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


cdef inline int c_orient(long long ax, long long ay, long long bx, long long by,
                         long long cx, long long cy) nogil:
    return c_sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


cdef inline int c_on_segment(long long px, long long py, long long ax, long long ay,
                             long long bx, long long by) nogil:
    cdef long long lo, hi
    if (px == ax and py == ay) or (px == bx and py == by):
        return 1
    if c_orient(ax, ay, bx, by, px, py) != 0:
        return 0
    lo = ax if ax <= bx else bx
    hi = bx if ax <= bx else ax
    if px < lo or px > hi:
        return 0
    lo = ay if ay <= by else by
    hi = by if ay <= by else ay
    if py < lo or py > hi:
        return 0
    return 2


cdef int c_classify(long long ax, long long ay, long long bx, long long by,
                    long long cx, long long cy, long long dx, long long dy) nogil:
    cdef int o1, o2, o3, o4
    cdef long long a0, b0, c0, d0, lo1, hi1, lo2, hi2, lo, hi, adx, ady
    o1 = c_orient(ax, ay, bx, by, cx, cy)
    o2 = c_orient(ax, ay, bx, by, dx, dy)
    if o1 == 0 and o2 == 0:
        adx = bx - ax if bx >= ax else ax - bx
        ady = by - ay if by >= ay else ay - by
        if adx >= ady:
            a0 = ax; b0 = bx; c0 = cx; d0 = dx
        else:
            a0 = ay; b0 = by; c0 = cy; d0 = dy
        lo1 = a0 if a0 <= b0 else b0
        hi1 = b0 if a0 <= b0 else a0
        lo2 = c0 if c0 <= d0 else d0
        hi2 = d0 if c0 <= d0 else c0
        lo = lo1 if lo1 >= lo2 else lo2
        hi = hi1 if hi1 <= hi2 else hi2
        if lo > hi:
            return C_DISJOINT
        if lo < hi:
            return C_COLLINEAR_OVERLAP
        return C_SHARED_ENDPOINT
    o3 = c_orient(cx, cy, dx, dy, ax, ay)
    o4 = c_orient(cx, cy, dx, dy, bx, by)
    if ((ax == cx and ay == cy) or (ax == dx and ay == dy)
            or (bx == cx and by == cy) or (bx == dx and by == dy)):
        return C_SHARED_ENDPOINT
    if o1 == 0 and c_on_segment(cx, cy, ax, ay, bx, by) == 2:
        return C_ENDPOINT_IN_INTERIOR
    if o2 == 0 and c_on_segment(dx, dy, ax, ay, bx, by) == 2:
        return C_ENDPOINT_IN_INTERIOR
    if o3 == 0 and c_on_segment(ax, ay, cx, cy, dx, dy) == 2:
        return C_ENDPOINT_IN_INTERIOR
    if o4 == 0 and c_on_segment(bx, by, cx, cy, dx, dy) == 2:
        return C_ENDPOINT_IN_INTERIOR
    if o1 * o2 < 0 and o3 * o4 < 0:
        return C_PROPER_CROSSING
    return C_DISJOINT


def orientation(long long ax, long long ay, long long bx, long long by,
                long long cx, long long cy):
    return c_orient(ax, ay, bx, by, cx, cy)


def point_on_segment(long long px, long long py, long long ax, long long ay,
                     long long bx, long long by):
    return c_on_segment(px, py, ax, ay, bx, by)


def seg_classify(long long ax, long long ay, long long bx, long long by,
                 long long cx, long long cy, long long dx, long long dy):
    return c_classify(ax, ay, bx, by, cx, cy, dx, dy)


def segment_clear(long long[:] xs, long long[:] ys, unsigned char[:] placed,
                  int[:] eu, int[:] ev, int a, int b):
    cdef long long ax = xs[a], ay = ys[a], bx = xs[b], by = ys[b]
    cdef Py_ssize_t i, u, v, p
    for i in range(eu.shape[0]):
        u = eu[i]
        v = ev[i]
        if c_classify(ax, ay, bx, by, xs[u], ys[u], xs[v], ys[v]) >= C_PROPER_CROSSING:
            return False
    for p in range(placed.shape[0]):
        if placed[p] and p != a and p != b:
            if c_on_segment(xs[p], ys[p], ax, ay, bx, by) == 2:
                return False
    return True


def pair_scan(long long[:] xs, long long[:] ys, int[:] eu, int[:] ev):
    cdef Py_ssize_t m = eu.shape[0]
    cdef Py_ssize_t i, j, a, b, c, d
    cdef long long ax, ay, bx, by
    for i in range(m):
        a = eu[i]; b = ev[i]
        ax = xs[a]; ay = ys[a]; bx = xs[b]; by = ys[b]
        for j in range(i + 1, m):
            c = eu[j]; d = ev[j]
            if c_classify(ax, ay, bx, by, xs[c], ys[c], xs[d], ys[d]) >= C_PROPER_CROSSING:
                return i * m + j
    return -1


def vertex_scan(long long[:] xs, long long[:] ys, int n, int[:] eu, int[:] ev):
    cdef Py_ssize_t m = eu.shape[0]
    cdef Py_ssize_t e, p, a, b
    cdef long long ax, ay, bx, by
    for e in range(m):
        a = eu[e]; b = ev[e]
        ax = xs[a]; ay = ys[a]; bx = xs[b]; by = ys[b]
        for p in range(n):
            if p == a or p == b:
                continue
            if c_on_segment(xs[p], ys[p], ax, ay, bx, by) == 2:
                return e * n + p
    return -1
