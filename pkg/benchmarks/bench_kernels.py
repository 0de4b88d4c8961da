"""Benchmark the compiled BFS kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import statistics
import time

from subsym import _kernels_py
from subsym.graphs import (
    make_complete,
    make_complete_bipartite,
    make_hoffman_singleton,
    random_connected_graph,
)
from subsym.transforms import subdivide

try:
    from subsym import _kernels_c
except ImportError:
    _kernels_c = None


def time_all_pairs(impl, indptr, indices, n, repeats=3):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        impl.all_pairs_distances(indptr, indices, n)
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.mean(samples)


def main():
    rng = random.Random(8)
    cases = [
        ("S(K_16)", subdivide(make_complete(16)).graph),
        ("S(K_{12,12})", subdivide(make_complete_bipartite(12, 12)).graph),
        ("S(K_{20,20})", subdivide(make_complete_bipartite(20, 20)).graph),
        ("S(HoSi)", subdivide(make_hoffman_singleton()).graph),
        ("random n=200", random_connected_graph(rng, 200)),
    ]
    print(f"{'graph':<14} {'n':>5} {'m':>6} {'pure (ms)':>12} {'cython (ms)':>12} {'speedup':>9}")
    for label, g in cases:
        indptr, indices = g._csr()
        pure_best, _ = time_all_pairs(_kernels_py, indptr, indices, g.n)
        if _kernels_c is None:
            print(f"{label:<14} {g.n:>5} {g.m:>6} {pure_best * 1e3:>12.2f} {'n/a':>12} {'n/a':>9}")
            continue
        fast_best, _ = time_all_pairs(_kernels_c, indptr, indices, g.n)
        print(
            f"{label:<14} {g.n:>5} {g.m:>6} {pure_best * 1e3:>12.2f} "
            f"{fast_best * 1e3:>12.2f} {pure_best / fast_best:>8.1f}x"
        )


if __name__ == "__main__":
    main()
