import random

import pytest
from hypothesis import given, settings, strategies as st

from subsym.graphs import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    bfs_distances,
    distance_sphere,
    enumerate_s_arcs,
    girth,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_hoffman_singleton,
    make_petersen,
    metrics,
    random_connected_graph,
    s_arcs_from,
)
from subsym.transforms import subdivide

from _oracles import brute_arcs, brute_diameter, brute_distances, brute_girth


def random_graph_strategy(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=2, max_value=max_n))
        all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        mask = draw(st.lists(st.booleans(), min_size=len(all_edges), max_size=len(all_edges)))
        return Graph(n, [e for e, keep in zip(all_edges, mask) if keep])

    return build()


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(GraphError):
            Graph(3, [(0, 0)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(GraphError):
            Graph(3, [(0, 1), (1, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph(2, [(0, 2)])

    def test_adjacency_symmetric_and_sorted(self):
        g = Graph(4, [(2, 0), (3, 1), (0, 1)])
        assert g.edge_list == ((0, 1), (0, 2), (1, 3))
        for u, v in g.edge_list:
            assert v in g.adjacency[u] and u in g.adjacency[v]
        assert all(list(a) == sorted(a) for a in g.adjacency)

    def test_edge_count_matches_valency_sum(self):
        g = make_petersen()
        assert 2 * g.m == sum(g.degree(v) for v in range(g.n))


class TestNamedGraphs:
    def test_complete_small(self):
        assert make_complete(2).edge_list == ((0, 1),)
        k4 = make_complete(4)
        assert k4.m == 6
        assert all(k4.degree(v) == 3 for v in range(4))
        assert metrics(k4).diameter == 1
        k9 = make_complete(9)
        assert k9.m == 36
        assert metrics(k9).girth == 3

    def test_complete_rejects_zero(self):
        with pytest.raises(GraphError):
            make_complete(0)

    def test_complete_bipartite(self):
        assert make_complete_bipartite(1, 1).edge_list == ((0, 1),)
        k22 = make_complete_bipartite(2, 2)
        assert (k22.n, k22.m, metrics(k22).girth) == (4, 4, 4)
        k33 = make_complete_bipartite(3, 3)
        met = metrics(k33)
        assert met.diameter == brute_diameter(k33) == 2
        assert met.girth == brute_girth(k33) == 4
        assert sorted(map(len, met.bipartition)) == [3, 3]

    def test_cycle(self):
        assert make_cycle(3).edge_list == make_complete(3).edge_list
        assert metrics(make_cycle(5)).diameter == 2
        assert metrics(make_cycle(5)).girth == 5
        assert metrics(make_cycle(6)).diameter == 3
        with pytest.raises(GraphError):
            make_cycle(2)

    def test_petersen(self):
        p = make_petersen()
        assert (p.n, p.m) == (10, 15)
        assert all(p.degree(v) == 3 for v in range(10))
        met = metrics(p)
        assert met.girth == brute_girth(p) == 5
        assert met.diameter == 2

    def test_hoffman_singleton(self):
        h = make_hoffman_singleton()
        assert h.n == 50
        assert all(h.degree(v) == 7 for v in range(50))
        met = metrics(h)
        assert met.diameter == 2
        assert met.girth == 5


class TestMetrics:
    def test_bfs_examples(self):
        assert bfs_distances(make_complete(4), 0) == [0, 1, 1, 1]
        assert bfs_distances(make_cycle(6), 0) == [0, 1, 2, 3, 2, 1]
        p = make_petersen()
        d = bfs_distances(p, 0)
        assert sorted(d) == [0] + [1] * 3 + [2] * 6

    def test_bfs_rejects_bad_vertex(self):
        with pytest.raises(GraphError):
            bfs_distances(make_complete(3), 5)

    def test_bfs_unreachable_sentinel(self):
        g = Graph(3, [(0, 1)])
        assert bfs_distances(g, 0) == [0, 1, -1]

    def test_disconnected_metrics_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            metrics(Graph(3, [(0, 1)]))

    def test_acyclic_girth_is_none(self):
        path = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert metrics(path).girth is None

    def test_girth_against_oracle_random(self):
        rng = random.Random(2024)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(3, 9))
            assert girth(g) == brute_girth(g)

    def test_distance_sphere(self):
        p = make_petersen()
        assert distance_sphere(p, 3, 0) == frozenset({3})
        sp = subdivide(make_petersen())
        # from a base vertex: [1, 3, 3, 6, 6, 6]; from an edge vertex the
        # level-4 sphere has 8 elements
        assert len(distance_sphere(sp.graph, 0, 4)) == 6
        assert len(distance_sphere(sp.graph, 10, 4)) == 8
        sh = subdivide(make_hoffman_singleton())
        assert len(distance_sphere(sh.graph, 50, 4)) == 72
        assert len(distance_sphere(sh.graph, 0, 1)) == 7

    @settings(max_examples=40, deadline=None)
    @given(random_graph_strategy())
    def test_sphere_sizes_partition_vertices(self, g):
        for v in range(g.n):
            reachable = brute_distances(g, v)
            total = sum(
                len(distance_sphere(g, v, i)) for i in range(0, g.n + 1)
            )
            assert total == len(reachable)

    @settings(max_examples=40, deadline=None)
    @given(random_graph_strategy())
    def test_girth_diameter_bound(self, g):
        if not g.is_connected():
            return
        gr = girth(g)
        if gr is not None:
            assert gr <= 2 * metrics(g).diameter + 1


class TestArcs:
    def test_single_edge(self):
        k2 = make_complete(2)
        assert [a.vertices for a in s_arcs_from(k2, 0, 1)] == [(0, 1)]
        assert s_arcs_from(k2, 0, 2) == []

    def test_cycle_directions(self):
        arcs = s_arcs_from(make_cycle(5), 0, 3)
        assert [a.vertices for a in arcs] == [(0, 1, 2, 3), (0, 4, 3, 2)]

    def test_triangle_counts(self):
        k3 = make_complete(3)
        assert len(enumerate_s_arcs(k3, 1)) == 6
        assert len(enumerate_s_arcs(k3, 2)) == 6

    def test_cycle_counts(self):
        for n in (4, 6, 9):
            g = make_cycle(n)
            for s in (1, 2, n - 1):
                assert len(enumerate_s_arcs(g, s)) == 2 * n

    def test_arcs_validate_and_are_lexicographic(self):
        g = make_petersen()
        arcs = enumerate_s_arcs(g, 3)
        for a in arcs:
            a.validate(g)
        assert [a.vertices for a in arcs] == sorted(a.vertices for a in arcs)

    def test_enumeration_deterministic(self):
        g = make_petersen()
        assert enumerate_s_arcs(g, 3) == enumerate_s_arcs(g, 3)

    def test_counts_match_brute_force(self):
        rng = random.Random(7)
        graphs = [random_connected_graph(rng, rng.randint(3, 8)) for _ in range(6)]
        graphs += [make_complete(4), make_cycle(5), make_complete_bipartite(2, 3)]
        for g in graphs:
            for s in range(1, 5):
                assert len(enumerate_s_arcs(g, s)) == len(brute_arcs(g, s))

    def test_rejects_bad_arguments(self):
        with pytest.raises(GraphError):
            s_arcs_from(make_complete(3), 0, 0)
        with pytest.raises(GraphError):
            s_arcs_from(make_complete(3), 9, 1)


class TestRandomGraphs:
    def test_connected_and_deterministic(self):
        a = random_connected_graph(random.Random(5), 9)
        b = random_connected_graph(random.Random(5), 9)
        assert a == b
        assert a.is_connected()
