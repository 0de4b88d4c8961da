import random

import pytest
from hypothesis import given, settings, strategies as st

from subsym.autgrp import automorphism_group
from subsym.graphs import Graph, enumerate_s_arcs, make_complete, make_cycle, make_petersen
from subsym.groups import (
    NotAnAutomorphismError,
    PermGroup,
    alternating_group,
    cycle_half_dihedral,
    cyclic_group,
    derived_subgroup,
    dihedral_group,
    from_generators,
    induced_edge_action,
    induced_subdivision_action,
    normal_closure,
    orbit,
    orbit_partition,
    pair_set_action,
    pgammal_2_8,
    pgl_2_8,
    point_action,
    random_subgroups,
    stabilizer_edge,
    stabilizer_point,
    symmetric_group,
    trivial_group,
    tuple_action,
    wreath_s2,
)
from subsym.perms import Perm, PermError
from subsym.theorems import is_k_transitive
from subsym.transforms import subdivide

from _oracles import brute_closure


class TestConstruction:
    def test_from_generators_infers_degree(self):
        G = from_generators([Perm.from_cycles(5, [(0, 1, 2, 3, 4)]), Perm.from_cycles(5, [(1, 4), (2, 3)])])
        assert G.degree == 5 and G.order() == 10

    def test_from_generators_empty_rejected(self):
        with pytest.raises(PermError):
            from_generators([])

    def test_trivial_group(self):
        G = trivial_group(5)
        assert G.order() == 1
        assert orbit(G, 2, point_action(5)) == [2]

    def test_degree_mismatch(self):
        with pytest.raises(PermError):
            PermGroup(4, [Perm.identity(5)])

    def test_standard_orders(self):
        assert symmetric_group(5).order() == 120
        assert symmetric_group(2).order() == 2
        assert alternating_group(4).order() == 12
        assert alternating_group(5).order() == 60
        assert alternating_group(6).order() == 360
        assert alternating_group(9).order() == 181440
        assert dihedral_group(3).order() == 6
        assert dihedral_group(5).order() == 10
        assert dihedral_group(16).order() == 32
        assert cyclic_group(7).order() == 7
        assert wreath_s2(3).order() == 72
        assert wreath_s2(4).order() == 1152
        assert cycle_half_dihedral(6).order() == 6

    def test_dihedral_rejects_small(self):
        with pytest.raises(PermError):
            dihedral_group(2)


class TestChainAgainstBruteForce:
    def test_dihedral(self):
        for n in range(3, 13):
            G = dihedral_group(n)
            assert G.order() == len(brute_closure(G.generators, n)) == 2 * n

    def test_symmetric(self):
        import math

        for n in range(2, 7):
            G = symmetric_group(n)
            assert G.order() == len(brute_closure(G.generators, n)) == math.factorial(n)

    def test_pgammal(self):
        G = pgammal_2_8()
        assert G.order() == len(brute_closure(G.generators, 9)) == 1512

    def test_petersen_aut(self):
        G = automorphism_group(make_petersen())
        assert G.order() == len(brute_closure(G.generators, 10)) == 120

    def test_membership_via_sift(self):
        G = dihedral_group(6)
        elements = {Perm(p) for p in brute_closure(G.generators, 6)}
        for p in elements:
            assert p in G
        outsider = Perm.from_cycles(6, [(0, 1)])
        assert outsider not in elements
        assert outsider not in G


class TestOrbitsAndStabilizers:
    def test_orbit_examples(self):
        d10 = dihedral_group(5)
        assert sorted(orbit(d10, 0, point_action(5))) == [0, 1, 2, 3, 4]
        p = make_petersen()
        G = automorphism_group(p)
        two_arcs = [a.vertices for a in enumerate_s_arcs(p, 2)]
        assert len(two_arcs) == 60
        assert len(orbit(G, two_arcs[0], tuple_action(two_arcs))) == 60

    def test_orbit_deterministic(self):
        G = symmetric_group(5)
        assert orbit(G, 0, point_action(5)) == orbit(G, 0, point_action(5))

    def test_stabilizer_point_orders(self):
        assert stabilizer_point(symmetric_group(5), 0).order() == 24
        p = make_petersen()
        G = automorphism_group(p)
        assert stabilizer_point(G, 0).order() == 12

    def test_stabilizer_fixes_point(self):
        G = automorphism_group(make_petersen())
        Gv = stabilizer_point(G, 3)
        assert all(g.images[3] == 3 for g in Gv.generators)

    def test_orbit_stabilizer_identity(self):
        rng = random.Random(11)
        for G in [symmetric_group(5), dihedral_group(8), pgammal_2_8(), alternating_group(6)]:
            for _ in range(3):
                x = rng.randrange(G.degree)
                assert G.order() == len(orbit(G, x, point_action(G.degree))) * stabilizer_point(G, x).order()

    def test_stabilizer_edge(self):
        p = make_petersen()
        G = automorphism_group(p)
        for e in p.edge_list[:3]:
            Ge = stabilizer_edge(G, e)
            assert Ge.order() == 8
            for g in Ge.generators:
                assert {g.images[e[0]], g.images[e[1]]} == set(e)

    def test_stabilizer_edge_trivial_group(self):
        G = trivial_group(4)
        assert stabilizer_edge(G, (0, 1)).order() == 1

    def test_hoffman_singleton_stabilizer_orders(self):
        from subsym.graphs import make_hoffman_singleton

        h = make_hoffman_singleton()
        full = automorphism_group(h)
        half = derived_subgroup(full)
        assert half.order() == 126000
        # vertex stabilizers: order 2520 in the simple half, 5040 in the full group
        assert stabilizer_point(half, 0).order() == 2520
        assert stabilizer_point(full, 0).order() == 5040
        # edge stabilizer in the simple half has order 720
        assert stabilizer_edge(half, h.edge_list[0]).order() == 720

    def test_edge_stabilizer_contains_pointwise_index_at_most_2(self):
        for G, e in [
            (automorphism_group(make_petersen()), (0, 9)),
            (symmetric_group(5), (1, 2)),
            (cyclic_group(6), (0, 1)),
        ]:
            Ge = stabilizer_edge(G, e)
            pointwise = stabilizer_point(stabilizer_point(G, e[0]), e[1])
            ratio = Ge.order() / pointwise.order()
            assert ratio in (1.0, 2.0)


class TestProjectiveGroups:
    def test_orders(self):
        assert pgl_2_8().order() == 504
        assert pgammal_2_8().order() == 1512

    def test_transitivity_degrees(self):
        G = pgammal_2_8()
        assert is_k_transitive(G, 3)
        assert not is_k_transitive(G, 4)
        H = pgl_2_8()
        assert is_k_transitive(H, 3)
        assert not is_k_transitive(H, 4)


class TestInducedActions:
    def test_edge_action_identity(self):
        g = make_complete(4)
        act = induced_edge_action(symmetric_group(4), g)
        e = Perm.identity(4)
        assert all(act.apply(e, i) == i for i in range(g.m))

    def test_edge_action_transitive(self):
        g = make_cycle(5)
        act = induced_edge_action(dihedral_group(5), g)
        G = dihedral_group(5)
        assert len(orbit(G, 0, act)) == 5
        k4 = make_complete(4)
        act4 = induced_edge_action(symmetric_group(4), k4)
        assert len(orbit(symmetric_group(4), 0, act4)) == 6

    def test_rejects_non_automorphism(self):
        path = Graph(3, [(0, 1), (1, 2)])
        with pytest.raises(NotAnAutomorphismError) as exc:
            induced_edge_action(cyclic_group(3), path)
        assert "generator 0" in str(exc.value)

    def test_subdivision_action_faithful(self):
        for g, G in [
            (make_cycle(5), dihedral_group(5)),
            (make_petersen(), automorphism_group(make_petersen())),
            (make_complete(4), alternating_group(4)),
        ]:
            sg = subdivide(g)
            Gs = induced_subdivision_action(G, sg)
            assert Gs.order() == G.order()
            assert Gs.degree == g.n + g.m

    def test_subdivision_action_lands_in_aut(self):
        g = make_cycle(5)
        sg = subdivide(g)
        Gs = induced_subdivision_action(dihedral_group(5), sg)
        from subsym.groups import is_graph_automorphism

        assert all(is_graph_automorphism(sg.graph, p) for p in Gs.generators)
        big = automorphism_group(sg.graph)
        assert all(p in big for p in Gs.generators)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=0, max_value=10**9))
    def test_action_axioms(self, seed):
        rng = random.Random(seed)
        g = make_petersen()
        G = automorphism_group(g)
        act = induced_edge_action(G, g)
        a = G.random_element(rng)
        b = G.random_element(rng)
        x = rng.randrange(g.m)
        assert act.apply(Perm.identity(10), x) == x
        assert act.apply(a * b, x) == act.apply(b, act.apply(a, x))


class TestSubgroups:
    def test_random_subgroups_contract(self):
        G = symmetric_group(5)
        subs = random_subgroups(G, 4, seed=17)
        assert subs[0].order() == 1
        assert subs[1] is G
        assert len(subs) == 6
        again = random_subgroups(G, 4, seed=17)
        assert [H.order() for H in subs] == [H.order() for H in again]
        for H in subs:
            assert G.order() % H.order() == 0
            assert all(p in G for p in H.generators)

    def test_random_subgroups_zero_count(self):
        G = dihedral_group(4)
        subs = random_subgroups(G, 0, seed=1)
        assert [H.order() for H in subs] == [1, 8]

    def test_derived_subgroups(self):
        assert derived_subgroup(symmetric_group(5)).order() == 60
        assert derived_subgroup(dihedral_group(5)).order() == 5
        assert derived_subgroup(alternating_group(4)).order() == 4  # V_4
        assert derived_subgroup(trivial_group(3)).order() == 1

    def test_normal_closure_is_normal(self):
        G = symmetric_group(4)
        N = normal_closure(G, [Perm.from_cycles(4, [(0, 1), (2, 3)])])
        assert N.order() == 4
        rng = random.Random(0)
        for _ in range(20):
            g = G.random_element(rng)
            n = N.random_element(rng)
            assert g.inverse() * n * g in N


class TestConcurrency:
    def test_concurrent_first_queries_agree(self):
        import threading

        from subsym.graphs import make_hoffman_singleton

        G = automorphism_group(make_hoffman_singleton())
        fresh = PermGroup(G.degree, G.generators)
        results = []

        def query():
            results.append(fresh.order())

        threads = [threading.Thread(target=query) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert results == [252000] * 8


class TestOrbitPartition:
    def test_partition_counts(self):
        G = cyclic_group(6)
        orbits, index = orbit_partition(G, list(range(6)), lambda p, x: p.images[x])
        assert len(orbits) == 1
        half = cycle_half_dihedral(6)
        edges = make_cycle(6).edge_list
        orbs, _ = orbit_partition(half, list(edges), pair_set_action(edges).apply)
        assert len(orbs) == 2
