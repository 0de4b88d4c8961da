import random

import numpy as np

from subsym import _kernels_py, kernels
from subsym.graphs import make_complete_bipartite, make_petersen, random_connected_graph
from subsym.transforms import subdivide

from _oracles import brute_distances

try:
    from subsym import _kernels_c
except ImportError:
    _kernels_c = None


def implementations():
    out = [_kernels_py]
    if _kernels_c is not None:
        out.append(_kernels_c)
    return out


def test_active_implementation_known():
    assert kernels.ACTIVE in ("cython", "python")


def test_single_source_matches_oracle():
    rng = random.Random(12)
    for _ in range(10):
        g = random_connected_graph(rng, rng.randint(3, 20))
        indptr, indices = g._csr()
        oracle = brute_distances(g, 0)
        for impl in implementations():
            dist = impl.bfs_distances(indptr, indices, g.n, 0)
            assert [int(x) for x in dist] == [oracle[v] for v in range(g.n)]


def test_all_pairs_implementations_agree():
    graphs = [
        make_petersen(),
        subdivide(make_complete_bipartite(4, 4)).graph,
    ]
    rng = random.Random(5)
    graphs += [random_connected_graph(rng, rng.randint(4, 25)) for _ in range(6)]
    for g in graphs:
        indptr, indices = g._csr()
        mats = [impl.all_pairs_distances(indptr, indices, g.n) for impl in implementations()]
        for m in mats[1:]:
            assert np.array_equal(mats[0], m)


def test_unreachable_is_minus_one():
    from subsym.graphs import Graph

    g = Graph(4, [(0, 1), (2, 3)])
    indptr, indices = g._csr()
    for impl in implementations():
        dist = impl.bfs_distances(indptr, indices, 4, 0)
        assert list(dist) == [0, 1, -1, -1]
