"""Defense-in-depth checks of the core engines against independent routes:
a naive all-vertices/all-elements evaluation of the local predicates, and
sympy's permutation-group machinery for chain orders."""

import random

import pytest

from subsym.autgrp import automorphism_group
from subsym.graphs import (
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_petersen,
    metrics,
    random_connected_graph,
)
from subsym.groups import random_subgroups
from subsym.perms import Perm
from subsym.symmetry import (
    is_locally_s_arc_transitive,
    is_locally_s_distance_transitive,
)
from subsym.transforms import subdivide
from subsym.groups import induced_subdivision_action

from _oracles import brute_arcs, brute_closure, brute_distances


def naive_locally_distance_transitive(g, elements, s):
    """Literal definition: for EVERY vertex, the stabilizer (filtered from the
    full element list) is transitive on every distance-i sphere, i <= s; the
    level-s sphere is nonempty for some vertex."""
    some_nonempty = False
    for v in range(g.n):
        dist = brute_distances(g, v)
        stab = [p for p in elements if p[v] == v]
        for i in range(1, s + 1):
            sphere = sorted(w for w in range(g.n) if dist.get(w) == i)
            if not sphere:
                continue
            if i == s:
                some_nonempty = True
            orb = {sphere[0]}
            frontier = [sphere[0]]
            while frontier:
                x = frontier.pop()
                for p in stab:
                    y = p[x]
                    if y not in orb:
                        orb.add(y)
                        frontier.append(y)
            if orb != set(sphere):
                return False
    return some_nonempty


def naive_locally_arc_transitive(g, elements, s):
    some_nonempty = False
    for v in range(g.n):
        stab = [p for p in elements if p[v] == v]
        for i in range(1, s + 1):
            arcs = [a for a in brute_arcs(g, i) if a[0] == v]
            if not arcs:
                continue
            if i == s:
                some_nonempty = True
            orb = {arcs[0]}
            frontier = [arcs[0]]
            while frontier:
                x = frontier.pop()
                for p in stab:
                    y = tuple(p[j] for j in x)
                    if y not in orb:
                        orb.add(y)
                        frontier.append(y)
            if orb != set(arcs):
                return False
    return some_nonempty


class TestAgainstNaiveDefinitions:
    def test_local_predicates_match_naive_on_random_instances(self):
        rng = random.Random(777)
        checked = 0
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(3, 6))
            aut = automorphism_group(g)
            groups = [aut] + random_subgroups(aut, 2, rng.randrange(2**30))[2:]
            d = metrics(g).diameter
            for G in groups:
                if G.order() > 5000:
                    continue
                elements = list(brute_closure(G.generators, g.n))
                for s in range(1, min(3, d) + 1):
                    fast = is_locally_s_distance_transitive(g, G, s).verdict
                    slow = naive_locally_distance_transitive(g, elements, s)
                    assert fast == slow, (g.edge_list, G.generators, s)
                    checked += 1
                for s in (1, 2):
                    fast = is_locally_s_arc_transitive(g, G, s).verdict
                    slow = naive_locally_arc_transitive(g, elements, s)
                    assert fast == slow, (g.edge_list, G.generators, s)
                    checked += 1
        assert checked > 40

    def test_subdivided_instances_match_naive(self):
        for g, G in [
            (make_complete(4), automorphism_group(make_complete(4))),
            (make_complete_bipartite(2, 2), automorphism_group(make_complete_bipartite(2, 2))),
            (make_cycle(5), automorphism_group(make_cycle(5))),
        ]:
            sg = subdivide(g)
            Gs = induced_subdivision_action(G, sg)
            elements = list(brute_closure(Gs.generators, sg.graph.n))
            d = metrics(sg.graph).diameter
            for s in range(1, d + 1):
                fast = is_locally_s_distance_transitive(sg.graph, Gs, s).verdict
                slow = naive_locally_distance_transitive(sg.graph, elements, s)
                assert fast == slow


class TestAgainstSympy:
    def test_chain_orders_match_sympy(self):
        sympy_perms = pytest.importorskip("sympy.combinatorics")
        from sympy.combinatorics import Permutation, PermutationGroup

        from subsym.groups import pgammal_2_8, wreath_s2
        from subsym.graphs import make_hoffman_singleton

        cases = [
            pgammal_2_8(),
            wreath_s2(4),
            automorphism_group(make_petersen()),
            automorphism_group(make_hoffman_singleton()),
        ]
        for G in cases:
            sympy_group = PermutationGroup(
                [Permutation(list(p.images)) for p in G.generators]
            )
            assert sympy_group.order() == G.order()

    def test_stabilizer_orders_match_sympy(self):
        pytest.importorskip("sympy.combinatorics")
        from sympy.combinatorics import Permutation, PermutationGroup

        from subsym.groups import stabilizer_point

        p = make_petersen()
        G = automorphism_group(p)
        sympy_group = PermutationGroup([Permutation(list(q.images)) for q in G.generators])
        for v in range(3):
            assert sympy_group.stabilizer(v).order() == stabilizer_point(G, v).order()
