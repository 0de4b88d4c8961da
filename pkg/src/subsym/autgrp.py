"""Graph automorphism group and isomorphism search.

Both run the same engine: equitable partition refinement (source and target
partitions refined in lockstep) plus backtracking on individualized vertices.
The automorphism group is assembled level by level: fix a base point, find
coset representatives mapping it across its cell, recurse into the stabilizer.
Found generators prune later candidates by orbit membership.
"""

from __future__ import annotations

from collections import Counter, defaultdict, deque
from typing import Optional, Sequence

from .graphs import Graph, GraphError
from .groups import PermGroup, orbit_transversal
from .perms import Perm


class BudgetExceededError(GraphError):
    pass


class _Cell:
    __slots__ = ("s", "t", "dead")

    def __init__(self, s: list[int], t: list[int]):
        self.s = s
        self.t = t
        self.dead = False


def _vertex_invariants(g: Graph) -> list[tuple]:
    """Per-vertex isomorphism invariant: valency plus distance distribution."""
    dist = g.distances_matrix()
    out = []
    for v in range(g.n):
        profile = tuple(sorted(Counter(int(d) for d in dist[v]).items()))
        out.append((g.degree(v), profile))
    return out


class _MappingSearch:
    _UNSET = object()

    def __init__(self, g1: Graph, g2: Graph, node_budget: Optional[int] = None):
        self.g1 = g1
        self.g2 = g2
        self.m1 = g1.neighbor_masks()
        self.m2 = g2.neighbor_masks()
        self.nodes = 0
        self.budget = node_budget
        self._groups = self._UNSET  # cached invariant grouping

    def initial_cells(self) -> Optional[list[_Cell]]:
        if self._groups is self._UNSET:
            self._groups = self._compute_groups()
        if self._groups is None:
            return None
        return [_Cell(s[:], t[:]) for s, t in self._groups]

    def _compute_groups(self) -> Optional[list[tuple[list[int], list[int]]]]:
        if self.g1.n != self.g2.n or self.g1.m != self.g2.m:
            return None
        inv1 = _vertex_invariants(self.g1)
        inv2 = _vertex_invariants(self.g2)
        by1: dict[tuple, list[int]] = defaultdict(list)
        by2: dict[tuple, list[int]] = defaultdict(list)
        for v, key in enumerate(inv1):
            by1[key].append(v)
        for v, key in enumerate(inv2):
            by2[key].append(v)
        if sorted(by1) != sorted(by2):
            return None
        groups = []
        for key in sorted(by1):
            if len(by1[key]) != len(by2[key]):
                return None
            groups.append((by1[key], by2[key]))
        return groups

    def find(self, prescribed: Sequence[tuple[int, int]] = ()) -> Optional[list[int]]:
        """A mapping (list over g1 vertices) extending the prescribed pairs,
        or None if no isomorphism does."""
        cells = self.initial_cells()
        if cells is None:
            return None
        for x, y in prescribed:
            cells = self._individualize(cells, x, y)
            if cells is None:
                return None
        return self._dfs(cells)

    # -- internals ---------------------------------------------------------

    def _individualize(self, cells: list[_Cell], x: int, y: int) -> Optional[list[_Cell]]:
        out = []
        found = False
        for c in cells:
            if x in c.s:
                if y not in c.t:
                    return None
                rest_s = [v for v in c.s if v != x]
                rest_t = [v for v in c.t if v != y]
                out.append(_Cell([x], [y]))
                if rest_s:
                    out.append(_Cell(rest_s, rest_t))
                found = True
            else:
                if y in c.t:
                    return None
                out.append(c)
        return out if found else None

    def _refine(self, cells: list[_Cell]) -> Optional[list[_Cell]]:
        work = deque(cells)
        while work:
            w = work.popleft()
            if w.dead:
                continue
            wms = 0
            for v in w.s:
                wms |= 1 << v
            wmt = 0
            for v in w.t:
                wmt |= 1 << v
            new_cells: list[_Cell] = []
            for c in cells:
                if len(c.s) == 1:
                    # still check the singleton's counts agree
                    if (self.m1[c.s[0]] & wms).bit_count() != (self.m2[c.t[0]] & wmt).bit_count():
                        return None
                    new_cells.append(c)
                    continue
                groups_s: dict[int, list[int]] = defaultdict(list)
                for v in c.s:
                    groups_s[(self.m1[v] & wms).bit_count()].append(v)
                groups_t: dict[int, list[int]] = defaultdict(list)
                for v in c.t:
                    groups_t[(self.m2[v] & wmt).bit_count()].append(v)
                keys = sorted(groups_s)
                if keys != sorted(groups_t):
                    return None
                if any(len(groups_s[k]) != len(groups_t[k]) for k in keys):
                    return None
                if len(keys) == 1:
                    new_cells.append(c)
                    continue
                c.dead = True
                for k in keys:
                    frag = _Cell(groups_s[k], groups_t[k])
                    new_cells.append(frag)
                    work.append(frag)
            cells = new_cells
        return cells

    def _dfs(self, cells: list[_Cell]) -> Optional[list[int]]:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceededError(
                f"mapping search exceeded {self.budget} nodes"
            )
        cells = self._refine(cells)
        if cells is None:
            return None
        target = None
        for c in cells:
            if len(c.s) > 1 and (target is None or len(c.s) < len(target.s)):
                target = c
        if target is None:
            return self._verify_leaf(cells)
        x = min(target.s)
        for y in sorted(target.t):
            child = [_Cell(c.s[:], c.t[:]) for c in cells]
            child = self._individualize(child, x, y)
            if child is None:
                continue
            res = self._dfs(child)
            if res is not None:
                return res
        return None

    def _verify_leaf(self, cells: list[_Cell]) -> Optional[list[int]]:
        mapping = [0] * self.g1.n
        for c in cells:
            mapping[c.s[0]] = c.t[0]
        for u, v in self.g1.edge_list:
            if not (self.m2[mapping[u]] >> mapping[v]) & 1:
                return None
        return mapping


def find_isomorphism(g1: Graph, g2: Graph, node_budget: Optional[int] = None) -> Optional[list[int]]:
    """A vertex bijection g1 -> g2 preserving adjacency, or None."""
    return _MappingSearch(g1, g2, node_budget).find()


def is_isomorphic(g1: Graph, g2: Graph, node_budget: Optional[int] = None) -> bool:
    return find_isomorphism(g1, g2, node_budget) is not None


def automorphism_group(g: Graph, node_budget: int = 2_000_000) -> PermGroup:
    """The full automorphism group of g as a permutation group.

    Level by level: refine with the current base prefix fixed, take the first
    smallest non-singleton cell, and resolve each candidate image of its least
    vertex either by orbit membership under already-found generators or by an
    explicit extension search. The product of the level orbit sizes is the
    group order, which callers can cross-check against the chain order.
    """
    if g.n > 400:
        raise BudgetExceededError("automorphism search is budgeted for n <= 400")
    if g.n == 0:
        return PermGroup(0, ())
    search = _MappingSearch(g, g, node_budget)
    base: list[int] = []
    all_gens: list[Perm] = []
    level_gens: list[list[Perm]] = []
    order = 1

    while True:
        cells = search.initial_cells()
        assert cells is not None
        for b in base:
            cells = search._individualize(cells, b, b)
            assert cells is not None
        cells = search._refine(cells)
        assert cells is not None
        target = None
        for c in cells:
            if len(c.s) > 1 and (target is None or len(c.s) < len(target.s)):
                target = c
        if target is None:
            break
        b = min(target.s)
        gens_here: list[Perm] = []
        level_gens.append(gens_here)
        prefix = [(p, p) for p in base]
        in_orbit = {b}
        excluded: set[int] = set()
        for w in sorted(target.s):
            if w in in_orbit or w in excluded:
                continue
            mapping = search.find(prescribed=prefix + [(b, w)])
            if mapping is None:
                excluded |= set(orbit_transversal(gens_here, w, g.n))
                continue
            perm = Perm(mapping)
            gens_here.append(perm)
            all_gens.append(perm)
            in_orbit = set(orbit_transversal(gens_here, b, g.n))
        order *= len(in_orbit)
        base.append(b)

    group = PermGroup(g.n, all_gens)
    # the search-side order is an independent count; a mismatch is a bug
    if group.order() != order:
        raise AssertionError("automorphism search order != chain order")
    return group
