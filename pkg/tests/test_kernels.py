"""Backend parity: the compiled kernels must agree with the pure ones bit
for bit on every input inside the 64-bit guard."""

import random
from array import array

import pytest

from affinecover import kernels
from affinecover.kernels import pure

fast = pytest.importorskip("affinecover.kernels._fast")


def random_segments(rng, lo=-30, hi=30):
    while True:
        coords = [rng.randint(lo, hi) for _ in range(8)]
        if (coords[0], coords[1]) != (coords[2], coords[3]) and \
                (coords[4], coords[5]) != (coords[6], coords[7]):
            return coords


def test_classify_parity_fuzz():
    rng = random.Random(1)
    for _ in range(20000):
        coords = random_segments(rng)
        assert fast.seg_classify(*coords) == pure.seg_classify(*coords), coords


def test_orientation_and_on_segment_parity():
    rng = random.Random(2)
    for _ in range(5000):
        c = [rng.randint(-20, 20) for _ in range(6)]
        assert fast.orientation(*c) == pure.orientation(*c)
        if (c[2], c[3]) != (c[4], c[5]):
            assert fast.point_on_segment(*c) == pure.point_on_segment(*c)


def test_scan_parity_on_random_drawings():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(2, 8)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-8, 8), rng.randint(-8, 8)))
        pts = sorted(pts)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        m = rng.randint(1, 10)
        eu, ev = [], []
        for _ in range(m):
            u, v = rng.sample(range(n), 2)
            eu.append(u)
            ev.append(v)
        a = (array("q", xs), array("q", ys), array("i", eu), array("i", ev))
        assert fast.pair_scan(*a) == pure.pair_scan(xs, ys, eu, ev)
        assert fast.vertex_scan(a[0], a[1], n, a[2], a[3]) == \
            pure.vertex_scan(xs, ys, n, eu, ev)


def test_segment_clear_parity():
    rng = random.Random(4)
    for _ in range(500):
        n = rng.randint(3, 8)
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-8, 8), rng.randint(-8, 8)))
        pts = sorted(pts)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        eu, ev = [], []
        for _ in range(rng.randint(0, 6)):
            u, v = rng.sample(range(n), 2)
            eu.append(u)
            ev.append(v)
        a, b = rng.sample(range(n), 2)
        placed = [1] * n
        got_fast = fast.segment_clear(array("q", xs), array("q", ys),
                                      array("B", placed),
                                      array("i", eu), array("i", ev), a, b)
        got_pure = pure.segment_clear(xs, ys, placed, eu, ev, a, b)
        assert got_fast == got_pure


def test_backend_reports_compiled():
    assert kernels.BACKEND in ("c", "python")
    assert kernels.impl.seg_classify(0, 0, 2, 2, 0, 2, 2, 0) == kernels.PROPER_CROSSING


def test_pure_handles_huge_coordinates():
    big = 10 ** 40
    assert pure.seg_classify(0, 0, big, big, 0, big, big, 0) == pure.PROPER_CROSSING
