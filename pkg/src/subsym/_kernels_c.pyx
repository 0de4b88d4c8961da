# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled breadth-first-search kernels (CSR adjacency).

Interface mirrors ``subsym._kernels_py``.
"""

import numpy as np


def bfs_distances(indptr, indices, int n, int source):
    """Hop distances from ``source``; unreached vertices get -1."""
    dist = np.full(n, -1, dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    cdef int[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int[::1] d = dist
    cdef int[::1] q = queue
    _bfs_fill(ip, ix, source, d, q)
    return dist


def all_pairs_distances(indptr, indices, int n):
    """(n, n) matrix of hop distances; -1 marks unreachable pairs."""
    out = np.empty((n, n), dtype=np.int32)
    queue = np.empty(n, dtype=np.int32)
    cdef int[::1] ip = np.ascontiguousarray(indptr, dtype=np.int32)
    cdef int[::1] ix = np.ascontiguousarray(indices, dtype=np.int32)
    cdef int[:, ::1] d2 = out
    cdef int[::1] q = queue
    cdef int s
    for s in range(n):
        d2[s, :] = -1
        _bfs_fill(ip, ix, s, d2[s], q)
    return out


cdef void _bfs_fill(int[::1] indptr, int[::1] indices, int source,
                    int[::1] dist, int[::1] queue) noexcept:
    cdef int head = 0, tail = 0
    cdef int v, w, dv, k
    dist[source] = 0
    queue[0] = source
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dist[w] < 0:
                dist[w] = dv
                queue[tail] = w
                tail += 1
