"""Exact minimum point cover by lines.

Candidate family: every line spanned by a pair of input points plus, for
each point, the horizontal line through it (the canonical choice for a
point no pair line ends up covering). An optimal cover always exists
inside this family: a line covering two or more points can be replaced by
the pair line through them, a line covering one point by that point's
horizontal.
"""

from __future__ import annotations

from math import ceil

from ..errors import CapacityError
from .primitives import Line2, Point2

MAX_POINTS = 14


def candidate_lines(points: list[Point2]) -> list[Line2]:
    cands = {Line2.horizontal(p.y) for p in points}
    for i, p in enumerate(points):
        for q in points[i + 1:]:
            cands.add(Line2.through(p, q))
    return sorted(cands)


def _cover_masks(points, lines):
    masks = []
    for line in lines:
        mask = 0
        for i, p in enumerate(points):
            if line.contains(p):
                mask |= 1 << i
        masks.append(mask)
    return masks


def _greedy_size(full: int, masks) -> int:
    uncovered = full
    k = 0
    while uncovered:
        best = max(masks, key=lambda m: bin(m & uncovered).count("1"))
        uncovered &= ~best
        k += 1
    return k


def min_line_cover(points, *, limit: int = MAX_POINTS) -> tuple[int, tuple[Line2, ...]]:
    """Minimum number of lines covering all points, with the cover itself.

    Exact branch and bound; ties between optimal covers break toward the
    lexicographically smallest set of normalized coefficient triples.
    """
    pts = sorted(set(points))
    if len(pts) > limit:
        raise CapacityError(f"{len(pts)} points exceeds the exact-search limit {limit}")
    if not pts:
        return 0, ()
    lines = candidate_lines(pts)
    masks = _cover_masks(pts, lines)
    full = (1 << len(pts)) - 1
    maxcov = max(bin(m).count("1") for m in masks)
    per_point = [[i for i, m in enumerate(masks) if m >> p & 1]
                 for p in range(len(pts))]

    best = _greedy_size(full, masks)

    def search(uncovered: int, used: int, budget: int) -> bool:
        """True if the uncovered set fits in the given number of lines."""
        if not uncovered:
            return True
        if budget <= 0:
            return False
        remaining = bin(uncovered).count("1")
        if ceil(remaining / maxcov) > budget:
            return False
        p = (uncovered & -uncovered).bit_length() - 1
        for li in per_point[p]:
            if search(uncovered & ~masks[li], used + 1, budget - 1):
                return True
        return False

    lo, hi = 1, best
    while lo < hi:
        mid = (lo + hi) // 2
        if search(full, 0, mid):
            hi = mid
        else:
            lo = mid + 1
    k = lo

    chosen: list[int] = []
    uncovered = full
    budget = k
    start = 0
    while uncovered:
        for li in range(start, len(lines)):
            if masks[li] & uncovered and search(uncovered & ~masks[li], 0, budget - 1):
                chosen.append(li)
                uncovered &= ~masks[li]
                budget -= 1
                start = li + 1
                break
        else:  # pragma: no cover - k is feasible by construction
            raise AssertionError("no feasible completion at optimal size")
    return k, tuple(lines[i] for i in chosen)


def min_cover_size_bruteforce(points) -> int:
    """Independent oracle: smallest covering subset of the candidate family."""
    from itertools import combinations

    pts = sorted(set(points))
    if not pts:
        return 0
    lines = candidate_lines(pts)
    masks = _cover_masks(pts, lines)
    full = (1 << len(pts)) - 1
    for k in range(1, len(pts) + 1):
        for combo in combinations(range(len(lines)), k):
            got = 0
            for li in combo:
                got |= masks[li]
            if got == full:
                return k
    return len(pts)
