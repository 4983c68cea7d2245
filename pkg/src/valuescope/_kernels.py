"""Betweenness kernels over CSR adjacency.

Two interchangeable implementations of Brandes' algorithm for unweighted,
undirected graphs:

* a numba ``@njit`` kernel (default when numba imports cleanly), and
* a pure-numpy level-synchronous fallback.

Set ``VALUESCOPE_DISABLE_NUMBA=1`` to force the fallback.  Both paths walk
sources in index order, so each is bitwise-deterministic for a given graph;
the two paths may disagree in the last float ulp because they accumulate
dependencies in different orders.

Returned scores are raw Brandes sums over ordered source/target pairs; the
caller halves them for the undirected convention.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(func):
            return func

        if args and callable(args[0]):
            return args[0]
        return wrap


def _numba_disabled() -> bool:
    return os.environ.get("VALUESCOPE_DISABLE_NUMBA", "").strip().lower() in (
        "1",
        "true",
        "yes",
        "on",
    )


USE_NUMBA = HAS_NUMBA and not _numba_disabled()


@njit(cache=True)
def _brandes_numba(indptr, indices, n):  # pragma: no cover - compiled
    bc = np.zeros(n, dtype=np.float64)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n, dtype=np.float64)
    delta = np.empty(n, dtype=np.float64)
    order = np.empty(n, dtype=np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            dv = dist[v]
            for ei in range(indptr[v], indptr[v + 1]):
                w = indices[ei]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
        # Nodes in reverse BFS order are non-increasing in distance, which is
        # exactly the order dependency accumulation needs.
        for oi in range(tail - 1, 0, -1):
            w = order[oi]
            coeff = (1.0 + delta[w]) / sigma[w]
            dw = dist[w]
            for ei in range(indptr[w], indptr[w + 1]):
                v = indices[ei]
                if dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
            bc[w] += delta[w]
    return bc


def _brandes_numpy(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    bc = np.zeros(n, dtype=np.float64)
    if n == 0 or len(indices) == 0:
        return bc
    heads = np.repeat(np.arange(n, dtype=np.int64), np.diff(indptr))
    tails = indices.astype(np.int64, copy=False)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        sigma = np.zeros(n, dtype=np.float64)
        dist[s] = 0
        sigma[s] = 1.0
        level = 0
        levels = 0
        while True:
            on_level = dist[heads] == level
            if not on_level.any():
                break
            step_heads = heads[on_level]
            step_tails = tails[on_level]
            fresh = dist[step_tails] < 0
            dist[step_tails[fresh]] = level + 1
            forward = dist[step_tails] == level + 1
            np.add.at(sigma, step_tails[forward], sigma[step_heads[forward]])
            level += 1
            levels = level
        delta = np.zeros(n, dtype=np.float64)
        for level in range(levels - 1, 0, -1):
            back = (dist[heads] == level - 1) & (dist[tails] == level)
            up = heads[back]
            down = tails[back]
            np.add.at(delta, up, sigma[up] / sigma[down] * (1.0 + delta[down]))
        delta[s] = 0.0
        bc += delta
    return bc


def betweenness_csr(indptr: np.ndarray, indices: np.ndarray, n: int) -> np.ndarray:
    """Raw Brandes betweenness for all nodes, picked per the env flag."""
    if n == 0:
        return np.zeros(0, dtype=np.float64)
    if USE_NUMBA:
        return _brandes_numba(
            indptr.astype(np.int64, copy=False),
            indices.astype(np.int64, copy=False),
            n,
        )
    return _brandes_numpy(indptr, indices, n)
