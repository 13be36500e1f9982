"""Benchmark: compiled kernels against the pure-Python fallback.

Runs the predicate workloads that dominate the searches and validators
on both backends and prints the speedup. Usage:

    python benchmarks/bench_kernels.py
"""

import random
import time
from array import array

from affinecover.kernels import pure

try:
    from affinecover.kernels import _fast as fast
except ImportError:
    fast = None


def make_segments(count, rng):
    segs = []
    while len(segs) < count:
        c = [rng.randint(-500, 500) for _ in range(8)]
        if (c[0], c[1]) != (c[2], c[3]) and (c[4], c[5]) != (c[6], c[7]):
            segs.append(c)
    return segs


def make_drawing(n, rng):
    # Crossing-free fan on a parabola so pair_scan runs the full O(m^2)
    # sweep instead of bailing at the first conflict.
    xs = [i for i in range(n)]
    ys = [i * i for i in range(n)]
    eu = [0] * (n - 1)
    ev = list(range(1, n))
    return xs, ys, eu, ev


def bench(label, fn, repeat=3):
    best = min(timeit(fn) for _ in range(repeat))
    print(f"  {label:<28} {best * 1000:9.2f} ms")
    return best


def timeit(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    rng = random.Random(0)
    segs = make_segments(20000, rng)
    xs, ys, eu, ev = make_drawing(120, rng)
    axs, ays = array("q", xs), array("q", ys)
    aeu, aev = array("i", eu), array("i", ev)
    placed_l = [1] * len(xs)
    placed_a = array("B", placed_l)
    pairs = [(rng.randrange(len(xs)), rng.randrange(len(xs))) for _ in range(2000)]
    pairs = [(a, b) for a, b in pairs if a != b]

    print("pure python backend:")
    t_cls_py = bench("seg_classify x20000",
                     lambda: [pure.seg_classify(*s) for s in segs])
    t_scan_py = bench("pair_scan 120v fan",
                      lambda: pure.pair_scan(xs, ys, eu, ev))
    t_clear_py = bench("segment_clear x2000",
                       lambda: [pure.segment_clear(xs, ys, placed_l, eu, ev, a, b)
                                for a, b in pairs])

    if fast is None:
        print("compiled backend not available")
        return

    print("compiled backend:")
    t_cls_c = bench("seg_classify x20000",
                    lambda: [fast.seg_classify(*s) for s in segs])
    t_scan_c = bench("pair_scan 120v fan",
                     lambda: fast.pair_scan(axs, ays, aeu, aev))
    t_clear_c = bench("segment_clear x2000",
                      lambda: [fast.segment_clear(axs, ays, placed_a, aeu, aev, a, b)
                               for a, b in pairs])

    print("speedup (pure / compiled):")
    print(f"  seg_classify   {t_cls_py / t_cls_c:6.1f}x")
    print(f"  pair_scan      {t_scan_py / t_scan_c:6.1f}x")
    print(f"  segment_clear  {t_clear_py / t_clear_c:6.1f}x")


if __name__ == "__main__":
    main()
