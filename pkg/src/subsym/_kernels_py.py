"""Pure-Python breadth-first-search kernels.

Same interface as the compiled module ``subsym._kernels_c``; used as the
fallback when the extension is unavailable (or forced via SUBSYM_PURE_PYTHON).
Graphs are passed in CSR form: ``indices[indptr[v]:indptr[v+1]]`` are the
neighbours of ``v``.
"""

import numpy as np


def bfs_distances(indptr, indices, n, source):
    """Hop distances from ``source``; unreached vertices get -1."""
    dist = np.full(n, -1, dtype=np.int32)
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        dv = dist[v]
        for w in indices[indptr[v]:indptr[v + 1]]:
            if dist[w] < 0:
                dist[w] = dv + 1
                queue.append(w)
    return dist


def all_pairs_distances(indptr, indices, n):
    """(n, n) matrix of hop distances; -1 marks unreachable pairs."""
    out = np.empty((n, n), dtype=np.int32)
    # Plain-list adjacency is noticeably faster than repeated array slicing.
    adj = [list(indices[indptr[v]:indptr[v + 1]]) for v in range(n)]
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            d = row[v] + 1
            for w in adj[v]:
                if row[w] < 0:
                    row[w] = d
                    queue.append(w)
        out[s] = row
    return out
