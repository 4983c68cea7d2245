"""Benchmark the two Brandes kernels against each other.

Builds seeded random graphs in CSR form and times the numba kernel and
the pure-numpy fallback on identical inputs, reporting wall time per
graph, the speedup, and the largest score disagreement.  Run it as

    python3 benchmarks/bench_betweenness.py
    python3 benchmarks/bench_betweenness.py --nodes 300 1000 3000 --repeats 5

The numpy column is always measured.  The numba column needs numba
importable; the VALUESCOPE_DISABLE_NUMBA flag is ignored here on purpose
so both paths can be compared in one invocation.
"""

import argparse
import random
import time

import numpy as np

from valuescope._kernels import HAS_NUMBA, _brandes_numpy

if HAS_NUMBA:
    from valuescope._kernels import _brandes_numba


def random_csr(n: int, edges_per_node: int, rng: random.Random):
    """Seeded undirected graph with about n * edges_per_node / 2 edges."""
    target = max(n - 1, n * edges_per_node // 2)
    pairs = set()
    while len(pairs) < target:
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i != j:
            pairs.add((min(i, j), max(i, j)))
    neighbors = [[] for _ in range(n)]
    for i, j in pairs:
        neighbors[i].append(j)
        neighbors[j].append(i)
    indptr = np.zeros(n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(adj) for adj in neighbors])
    indices = np.fromiter(
        (j for adj in neighbors for j in sorted(adj)),
        dtype=np.int64,
        count=int(indptr[-1]),
    )
    return indptr, indices, len(pairs)


def timed(kernel, indptr, indices, n, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = kernel(indptr, indices, n)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--nodes", type=int, nargs="+", default=[200, 500, 1000, 2000]
    )
    parser.add_argument("--edges-per-node", type=int, default=6)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    if HAS_NUMBA:
        # First call pays the JIT compile; keep it out of the timings.
        warm = random_csr(30, 4, random.Random(0))
        _brandes_numba(warm[0], warm[1], 30)
        header = f"{'n':>6} {'edges':>8} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8} {'max |diff|':>11}"
    else:
        print("numba is not importable; timing the numpy fallback only")
        header = f"{'n':>6} {'edges':>8} {'numpy (s)':>10}"
    print(header)
    print("-" * len(header))

    rng = random.Random(args.seed)
    for n in args.nodes:
        indptr, indices, edges = random_csr(n, args.edges_per_node, rng)
        numpy_time, numpy_scores = timed(
            _brandes_numpy, indptr, indices, n, args.repeats
        )
        if HAS_NUMBA:
            numba_time, numba_scores = timed(
                _brandes_numba, indptr, indices, n, args.repeats
            )
            drift = float(np.max(np.abs(numba_scores - numpy_scores)))
            print(
                f"{n:>6} {edges:>8} {numpy_time:>10.3f} {numba_time:>10.3f} "
                f"{numpy_time / numba_time:>7.1f}x {drift:>11.2e}"
            )
        else:
            print(f"{n:>6} {edges:>8} {numpy_time:>10.3f}")


if __name__ == "__main__":
    main()
