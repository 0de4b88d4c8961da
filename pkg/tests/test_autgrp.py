import math
import random

import pytest

from subsym.autgrp import (
    BudgetExceededError,
    automorphism_group,
    find_isomorphism,
    is_isomorphic,
)
from subsym.graphs import (
    Graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_hoffman_singleton,
    make_petersen,
    random_connected_graph,
)
from subsym.transforms import subdivide


class TestAutomorphismGroup:
    def test_complete(self):
        for n in range(2, 8):
            assert automorphism_group(make_complete(n)).order() == math.factorial(n)

    def test_cycles(self):
        for n in range(3, 13):
            assert automorphism_group(make_cycle(n)).order() == 2 * n

    def test_petersen(self):
        assert automorphism_group(make_petersen()).order() == 120

    def test_complete_bipartite(self):
        assert automorphism_group(make_complete_bipartite(3, 3)).order() == 72
        assert automorphism_group(make_complete_bipartite(2, 3)).order() == 12

    def test_hoffman_singleton(self):
        assert automorphism_group(make_hoffman_singleton()).order() == 252000

    def test_generators_are_automorphisms(self):
        g = make_petersen()
        G = automorphism_group(g)
        from subsym.groups import is_graph_automorphism

        assert all(is_graph_automorphism(g, p) for p in G.generators)

    def test_asymmetric_graph(self):
        # smallest asymmetric graphs have 6 vertices; this is one of them
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3), (1, 4)])
        assert automorphism_group(g).order() == 1

    def test_subdivision_preserves_aut_order_for_non_cycles(self):
        for g in [make_petersen(), make_complete(5), make_complete_bipartite(2, 3)]:
            assert (
                automorphism_group(subdivide(g).graph).order()
                == automorphism_group(g).order()
            )

    def test_subdivided_cycle_doubles_aut(self):
        for n in (3, 5, 8):
            assert automorphism_group(subdivide(make_cycle(n)).graph).order() == 4 * n


class TestIsomorphism:
    def test_subdivided_triangle_is_six_cycle(self):
        assert is_isomorphic(subdivide(make_complete(3)).graph, make_cycle(6))

    def test_relabelled_random_graphs(self):
        rng = random.Random(31)
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(4, 9))
            images = list(range(g.n))
            rng.shuffle(images)
            relabelled = Graph(g.n, [(images[u], images[v]) for u, v in g.edge_list])
            mapping = find_isomorphism(g, relabelled)
            assert mapping is not None
            for u, v in g.edge_list:
                assert relabelled.has_edge(mapping[u], mapping[v])

    def test_non_isomorphic_pairs(self):
        assert not is_isomorphic(make_cycle(6), make_complete_bipartite(3, 3))
        assert not is_isomorphic(make_cycle(5), make_cycle(6))
        # same degree sequence, different graphs: C_6 vs two triangles is
        # disconnected, use C_6 vs prism minus an edge instead
        prism = Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
        assert not is_isomorphic(prism, make_complete_bipartite(3, 3))

    def test_budget_error(self):
        g = subdivide(make_complete(9)).graph
        with pytest.raises(BudgetExceededError):
            automorphism_group(g, node_budget=3)
