"""Array kernels with numba-accelerated and pure-NumPy implementations.

The hot loops at desk scale are breadth-first distance sweeps over CSR
graphs (Farey balls, member graphs, glued quasi-tree graphs) and the batch
matching filter used when enumerating small normal vectors.  Each kernel has
a jitted body and a NumPy fallback; the active backend is chosen once at
import time.

Set ``CURVESCOPE_NUMBA=0`` to force the fallback path (the benchmark in
benchmarks/bench_kernels.py compares the two).
"""

import os

import numpy as np

_WANT_NUMBA = os.environ.get("CURVESCOPE_NUMBA", "1") != "0"

if _WANT_NUMBA:
    try:
        from numba import njit

        HAS_NUMBA = True
    except ImportError:  # pragma: no cover - environment without numba
        HAS_NUMBA = False
else:
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# BFS over a CSR graph


def _bfs_numpy(indptr, indices, source):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    d = 0
    while frontier.size:
        d += 1
        nxt = []
        for u in frontier:
            nbrs = indices[indptr[u]:indptr[u + 1]]
            fresh = nbrs[dist[nbrs] < 0]
            dist[fresh] = d
            nxt.append(fresh)
        frontier = np.concatenate(nxt) if nxt else np.empty(0, dtype=np.int64)
        if frontier.size:
            frontier = np.unique(frontier)
    return dist


def _bfs_loop(indptr, indices, source):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    head = 0
    tail = 0
    queue[tail] = source
    tail += 1
    dist[source] = 0
    while head < tail:
        u = queue[head]
        head += 1
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue[tail] = v
                tail += 1
    return dist


# ---------------------------------------------------------------------------
# Batch matching filter: keep weight rows that satisfy, in every triangle,
# the evenness and triangle-inequality conditions on the three slot values.


def _matching_mask_numpy(slot_weights):
    a = slot_weights[:, :, 0]
    b = slot_weights[:, :, 1]
    c = slot_weights[:, :, 2]
    even = (a + b + c) % 2 == 0
    tri = (a <= b + c) & (b <= a + c) & (c <= a + b)
    return np.all(even & tri, axis=1)


def _matching_mask_loop(slot_weights):
    n = slot_weights.shape[0]
    m = slot_weights.shape[1]
    out = np.ones(n, dtype=np.bool_)
    for i in range(n):
        for t in range(m):
            a = slot_weights[i, t, 0]
            b = slot_weights[i, t, 1]
            c = slot_weights[i, t, 2]
            if (a + b + c) % 2 != 0 or a > b + c or b > a + c or c > a + b:
                out[i] = False
                break
    return out


if HAS_NUMBA:
    _bfs_jit = njit(cache=True)(_bfs_loop)
    _matching_mask_jit = njit(cache=True)(_matching_mask_loop)

    def csr_bfs(indptr, indices, source):
        return _bfs_jit(indptr, indices, np.int64(source))

    def matching_mask(slot_weights):
        return _matching_mask_jit(np.ascontiguousarray(slot_weights))

else:

    def csr_bfs(indptr, indices, source):
        return _bfs_numpy(indptr, indices, source)

    def matching_mask(slot_weights):
        return _matching_mask_numpy(slot_weights)


def csr_from_edges(n, pairs):
    """Build (indptr, indices) for an undirected graph on n vertices."""
    deg = np.zeros(n + 1, dtype=np.int64)
    pairs = [(u, v) for (u, v) in pairs]
    for u, v in pairs:
        deg[u + 1] += 1
        deg[v + 1] += 1
    indptr = np.cumsum(deg)
    indices = np.empty(int(indptr[-1]), dtype=np.int64)
    fill = indptr[:-1].copy()
    for u, v in pairs:
        indices[fill[u]] = v
        fill[u] += 1
        indices[fill[v]] = u
        fill[v] += 1
    return indptr, indices
