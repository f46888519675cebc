"""Time the Monte-Carlo point-location kernel: numba against the numpy fallback.

    python3 benchmarks/bench_locate.py [--points N] [--intervals M] [--repeat R]
"""
import argparse
import timeit

import numpy as np

from simplicial_rv import _kernels


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=1_000_000)
    ap.add_argument("--intervals", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    pts = rng.random(args.points)
    edges = np.sort(rng.random(2 * args.intervals))
    los, his = edges[::2].copy(), edges[1::2].copy()

    kernels = {"numpy": _kernels.locate_numpy}
    if _kernels.USE_NUMBA:
        _kernels.locate_numba(pts[:10], los, his)  # compile outside the timing
        kernels["numba"] = _kernels.locate_numba
    else:
        print("numba disabled; timing the numpy path only")

    ref = _kernels.locate_numpy(pts, los, his)
    for name, fn in kernels.items():
        assert np.array_equal(fn(pts, los, his), ref)
        best = min(timeit.repeat(lambda: fn(pts, los, his), number=1, repeat=args.repeat))
        print(f"{name:6s} {args.points:>9d} points {args.intervals:>5d} intervals  {best * 1e3:8.2f} ms")


if __name__ == "__main__":
    main()
