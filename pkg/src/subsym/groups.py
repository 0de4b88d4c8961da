"""Exact permutation groups: stabilizer chains, orbits, stabilizers, actions.

The stabilizer chain is built by a deterministic incremental Schreier-Sims:
each added strong generator extends its level's orbit and only the newly
created (point, generator) Schreier pairs are sifted. Base points are chosen
greedily from the largest orbits, which keeps transversals shallow for the
highly transitive groups this library works with.
"""

from __future__ import annotations

import random
import threading
from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional, Sequence

from .graphs import Graph, GraphError
from .perms import Perm, PermError


class NotAnAutomorphismError(GraphError):
    def __init__(self, index: int, message: str):
        super().__init__(f"generator {index}: {message}")
        self.index = index


class _Level:
    __slots__ = ("point", "gens", "transversal", "transversal_inv")

    def __init__(self, point: int, degree: int):
        ident = Perm.identity(degree)
        self.point = point
        self.gens: list[Perm] = []  # all strong generators fixing earlier base points
        self.transversal: dict[int, Perm] = {point: ident}
        self.transversal_inv: dict[int, Perm] = {point: ident}


class StabilizerChain:
    """Base points with transversals; supports order, sifting, sampling.

    Generator sets are nested: level i holds every strong generator that fixes
    the base points of levels 0..i-1, so each level's orbit is computed under
    the full stabilizer at that level.
    """

    def __init__(self, degree: int, generators: Sequence[Perm], base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.levels: list[_Level] = []
        self._base_prefix = list(base_prefix)
        self._precedence = self._base_point_precedence(generators)
        for g in generators:
            self.add_generator(g)

    @classmethod
    def _from_levels(cls, degree: int, levels: list[_Level]) -> "StabilizerChain":
        chain = cls.__new__(cls)
        chain.degree = degree
        chain.levels = levels
        chain._base_prefix = []
        chain._precedence = list(range(degree))
        return chain

    def _base_point_precedence(self, generators: Sequence[Perm]) -> list[int]:
        # points ordered by decreasing orbit size under the full generating set
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in generators:
            for i, j in enumerate(g.images):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        size: dict[int, int] = {}
        for i in range(self.degree):
            size[find(i)] = size.get(find(i), 0) + 1
        return sorted(range(self.degree), key=lambda i: (-size[find(i)], i))

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.transversal)
        return out

    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def generators_at(self, level: int) -> list[Perm]:
        """Generators of the level-th stabilizer subgroup."""
        if level >= len(self.levels):
            return []
        return list(self.levels[level].gens)

    def sift(self, p: Perm, start: int = 0) -> tuple[Perm, int]:
        """Reduce p through the chain; returns (residue, level it stuck at)."""
        i = start
        for lvl in self.levels[start:]:
            beta = p.images[lvl.point]
            u_inv = lvl.transversal_inv.get(beta)
            if u_inv is None:
                return p, i
            p = p * u_inv
            i += 1
        return p, i

    def contains(self, p: Perm) -> bool:
        residue, _ = self.sift(p)
        return residue.is_identity()

    def add_generator(self, g: Perm) -> None:
        if g.degree != self.degree:
            raise PermError("generator degree mismatch")
        if g.is_identity():
            return
        residue, _ = self.sift(g)
        if residue.is_identity():
            return
        self._insert(g, 0)

    def _next_base_point(self, moved_by: Perm, idx: int) -> int:
        if idx < len(self._base_prefix):
            return self._base_prefix[idx]
        for p in self._precedence:
            if moved_by.images[p] != p:
                return p
        raise AssertionError("identity residue reached base point selection")

    def _insert(self, g: Perm, start: int) -> None:
        """Add g (known to fix base points of levels < start) to the chain."""
        j = start
        while True:
            if j == len(self.levels):
                self.levels.append(_Level(self._next_base_point(g, j), self.degree))
            lvl = self.levels[j]
            self._process_new_generator(j, g)
            if g.images[lvl.point] != lvl.point:
                return
            j += 1

    def _process_new_generator(self, j: int, g: Perm) -> None:
        """Append g at level j; extend its orbit; sift the new Schreier pairs."""
        lvl = self.levels[j]
        if g in lvl.gens:  # already processed here via a Schreier residue
            return
        lvl.gens.append(g)
        pairs = deque((p, g) for p in sorted(lvl.transversal))
        while pairs:
            p, s = pairs.popleft()
            q = s.images[p]
            u_p = lvl.transversal[p]
            if q not in lvl.transversal:
                u_q = u_p * s
                lvl.transversal[q] = u_q
                lvl.transversal_inv[q] = u_q.inverse()
                for t in lvl.gens:
                    pairs.append((q, t))
                continue
            schreier = u_p * s * lvl.transversal_inv[q]
            residue, _ = self.sift(schreier, j + 1)
            if not residue.is_identity():
                self._insert(residue, j + 1)

    def random_element(self, rng: random.Random) -> Perm:
        out = Perm.identity(self.degree)
        for lvl in reversed(self.levels):
            target = rng.choice(sorted(lvl.transversal))
            out = out * lvl.transversal[target]
        return out

    def strong_generators(self) -> list[Perm]:
        return self.generators_at(0)


class PermGroup:
    """A permutation group given by generators, with a lazily built chain."""

    __slots__ = ("degree", "generators", "_chain", "_lock", "_validated_graphs", "__weakref__")

    def __init__(self, degree: int, generators: Iterable[Perm] = (), _chain: Optional[StabilizerChain] = None):
        gens = []
        for g in generators:
            if not isinstance(g, Perm):
                g = Perm(g)
            if g.degree != degree:
                raise PermError(f"generator degree {g.degree} != group degree {degree}")
            if not g.is_identity():
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._chain = _chain
        self._lock = threading.Lock()
        self._validated_graphs: list = []

    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = StabilizerChain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        return self.chain().order()

    def __contains__(self, p: Perm) -> bool:
        if p.degree != self.degree:
            return False
        return self.chain().contains(p)

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def random_element(self, rng: random.Random) -> Perm:
        return self.chain().random_element(rng)

    def point_orbits(self) -> list[list[int]]:
        """Orbits on 0..degree-1, each sorted, ordered by least element."""
        seen = [False] * self.degree
        orbits = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orb = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for g in self.generators:
                    y = g.images[x]
                    if not seen[y]:
                        seen[y] = True
                        orb.append(y)
                        queue.append(y)
            orbits.append(sorted(orb))
        return orbits

    def is_transitive(self) -> bool:
        return len(self.point_orbits()) <= 1 or self.degree == 0

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)})"


@dataclass(frozen=True)
class Action:
    """A G-action: a finite domain plus apply(perm, element) -> element."""

    domain: tuple
    apply: Callable[[Perm, Any], Any]


def point_action(degree: int) -> Action:
    return Action(domain=tuple(range(degree)), apply=lambda p, x: p.images[x])


def tuple_action(domain: Iterable[tuple[int, ...]]) -> Action:
    return Action(domain=tuple(domain), apply=lambda p, t: p.apply_tuple(t))


def pair_set_action(domain: Iterable[tuple[int, int]]) -> Action:
    """Action on unordered pairs kept as sorted tuples."""

    def apply(p: Perm, e: tuple[int, int]) -> tuple[int, int]:
        a, b = p.images[e[0]], p.images[e[1]]
        return (a, b) if a < b else (b, a)

    return Action(domain=tuple(domain), apply=apply)


def orbit(G: PermGroup, x: Any, act: Action) -> list:
    """The orbit of x, in deterministic BFS insertion order."""
    seen = {x}
    out = [x]
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for g in G.generators:
            z = act.apply(g, y)
            if z not in seen:
                seen.add(z)
                out.append(z)
                queue.append(z)
    return out


def orbit_partition(G: PermGroup, domain: Sequence, apply: Callable[[Perm, Any], Any]) -> tuple[list[list], dict]:
    """All orbits of G on a G-invariant domain; returns (orbits, element->orbit id)."""
    index: dict[Any, int] = {}
    orbits: list[list] = []
    for x in domain:
        if x in index:
            continue
        oid = len(orbits)
        orb = [x]
        index[x] = oid
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g in G.generators:
                z = apply(g, y)
                if z not in index:
                    index[z] = oid
                    orb.append(z)
                    queue.append(z)
        orbits.append(orb)
    return orbits, index


def orbit_transversal(gens: Sequence[Perm], x: int, degree: int) -> dict[int, Perm]:
    """Orbit of a point with witness elements: result[y] maps x to y."""
    out = {x: Perm.identity(degree)}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        u = out[y]
        for g in gens:
            z = g.images[y]
            if z not in out:
                out[z] = u * g
                queue.append(z)
    return out


# -- group constructors -------------------------------------------------------


def from_generators(perms: Sequence[Perm]) -> PermGroup:
    if not perms:
        raise PermError("need at least one permutation to infer the degree")
    degree = perms[0].degree
    return PermGroup(degree, perms)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, ())


def cyclic_group(n: int) -> PermGroup:
    return PermGroup(n, [Perm(tuple((i + 1) % n for i in range(n)))])


def symmetric_group(n: int) -> PermGroup:
    if n <= 1:
        return trivial_group(max(n, 1))
    gens = [Perm.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Perm(tuple((i + 1) % n for i in range(n))))
    return PermGroup(n, gens)


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return trivial_group(max(n, 1))
    if n == 3:
        return PermGroup(3, [Perm.from_cycles(3, [(0, 1, 2)])])
    three = Perm.from_cycles(n, [(0, 1, 2)])
    if n % 2 == 1:
        big = Perm.from_cycles(n, [tuple(range(n))])
    else:
        big = Perm.from_cycles(n, [tuple(range(1, n))])
    return PermGroup(n, [three, big])


def dihedral_group(n: int) -> PermGroup:
    """Rotation plus reflection on cycle ids 0..n-1; order 2n."""
    if n < 3:
        raise PermError("dihedral group on a cycle needs n >= 3")
    rot = Perm(tuple((i + 1) % n for i in range(n)))
    ref = Perm(tuple((n - i) % n for i in range(n)))
    return PermGroup(n, [rot, ref])


def cycle_half_dihedral(n: int) -> PermGroup:
    """For even n: the order-n subgroup of the dihedral group generated by the
    double rotation and an edge reflection; vertex transitive with two edge
    orbits on the n-cycle."""
    if n < 4 or n % 2 != 0:
        raise PermError("half-dihedral subgroup needs even n >= 4")
    rot2 = Perm(tuple((i + 2) % n for i in range(n)))
    ref = Perm(tuple((1 - i) % n for i in range(n)))
    return PermGroup(n, [rot2, ref])


def wreath_s2(n: int) -> PermGroup:
    """S_n wr S_2 acting on 2n points with blocks {0..n-1}, {n..2n-1}."""
    if n < 1:
        raise PermError("need n >= 1")
    swap = Perm(tuple(list(range(n, 2 * n)) + list(range(n))))
    gens = [swap]
    if n >= 2:
        gens.append(Perm.from_cycles(2 * n, [(0, 1)]))
        gens.append(Perm(tuple([(i + 1) % n for i in range(n)] + list(range(n, 2 * n)))))
    return PermGroup(2 * n, gens)


# -- PGL(2,8) and PGammaL(2,8) on the projective line -------------------------
#
# GF(8) is the polynomial model with x^3 = x + 1; field elements are the bit
# patterns 0..7. Projective line labels: 0 = infinity, 1+t = field element t.

_GF8_POLY = 0b1011


def _gf8_mul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a & 0b1000:
            a ^= _GF8_POLY
    return out


def _gf8_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(8)")
    # a^7 = 1 for a != 0, so a^-1 = a^6
    out = 1
    for _ in range(6):
        out = _gf8_mul(out, a)
    return out


def _projective_perm(fn: Callable[[Optional[int]], Optional[int]]) -> Perm:
    # None encodes the point at infinity
    images = []
    for pt in [None] + list(range(8)):
        img = fn(pt)
        images.append(0 if img is None else 1 + img)
    return Perm(images)


def pgl_2_8() -> PermGroup:
    """PGL(2,8) on the 9 points of the projective line over GF(8); order 504."""
    t = _projective_perm(lambda x: None if x is None else x ^ 1)
    m = _projective_perm(lambda x: None if x is None else _gf8_mul(2, x))
    inv = _projective_perm(
        lambda x: 0 if x is None else (None if x == 0 else _gf8_inv(x))
    )
    G = PermGroup(9, [t, m, inv])
    if G.order() != 504:
        raise AssertionError("PGL(2,8) self-check failed")
    return G


def pgammal_2_8() -> PermGroup:
    """PGammaL(2,8): PGL(2,8) extended by the Frobenius x -> x^2; order 1512."""
    base = pgl_2_8()
    frob = _projective_perm(lambda x: None if x is None else _gf8_mul(x, x))
    G = PermGroup(9, list(base.generators) + [frob])
    if G.order() != 1512:
        raise AssertionError("PGammaL(2,8) self-check failed")
    return G


# -- stabilizers ---------------------------------------------------------------


def stabilizer_point(G: PermGroup, v: int) -> PermGroup:
    """The point stabilizer G_v, via a chain based at v."""
    if not (0 <= v < G.degree):
        raise PermError(f"point {v} out of range")
    chain = StabilizerChain(G.degree, G.generators, base_prefix=[v])
    if len(chain.levels) < 2:
        return PermGroup(G.degree, ())
    tail = chain.levels[1:]
    return PermGroup(
        G.degree,
        chain.generators_at(1),
        _chain=StabilizerChain._from_levels(G.degree, tail),
    )


def stabilizer_edge(G: PermGroup, e: tuple[int, int]) -> PermGroup:
    """Setwise stabilizer of a 2-set: the pointwise stabilizer extended by one
    endpoint-swapping coset representative when such an element exists."""
    u, v = e
    if u == v:
        raise PermError("edge must be a 2-set")
    # base prefix [u, v] puts the pointwise stabilizer at chain level 2
    chain = StabilizerChain(G.degree, G.generators, base_prefix=[u, v])
    gens: list[Perm] = chain.generators_at(2)
    swap = _swap_element(G, u, v)
    if swap is not None:
        gens.append(swap)
    return PermGroup(G.degree, gens)


def _swap_element(G: PermGroup, u: int, v: int) -> Optional[Perm]:
    """An element with u^g = v and v^g = u, if one exists."""
    trans_u = orbit_transversal(G.generators, u, G.degree)
    t = trans_u.get(v)
    if t is None:
        return None
    # want g = h * t with h in G_u and v^h = u^(t^-1)
    target = t.inverse().images[u]
    Gu = stabilizer_point(G, u)
    trans_v = orbit_transversal(Gu.generators, v, G.degree)
    h = trans_v.get(target)
    if h is None:
        return None
    g = h * t
    assert g.images[u] == v and g.images[v] == u
    return g


# -- induced actions ------------------------------------------------------------


def is_graph_automorphism(g: Graph, p: Perm) -> bool:
    if p.degree != g.n:
        return False
    index = g.edge_index()
    for u, v in g.edge_list:
        a, b = p.images[u], p.images[v]
        if ((a, b) if a < b else (b, a)) not in index:
            return False
    return True


def validate_automorphisms(g: Graph, G: PermGroup) -> None:
    """Check every generator preserves adjacency; cached per (graph, group)."""
    for known in G._validated_graphs:
        if known is g:
            return
    for i, p in enumerate(G.generators):
        if not is_graph_automorphism(g, p):
            raise NotAnAutomorphismError(i, "does not preserve adjacency")
    G._validated_graphs.append(g)


def induced_edge_action(G: PermGroup, g: Graph) -> Action:
    """The action of G on sorted-edge indices of g."""
    validate_automorphisms(g, G)
    index = g.edge_index()
    edges = g.edge_list

    def apply(p: Perm, ei: int) -> int:
        u, v = edges[ei]
        a, b = p.images[u], p.images[v]
        return index[(a, b) if a < b else (b, a)]

    return Action(domain=tuple(range(g.m)), apply=apply)


def induced_subdivision_action(G: PermGroup, sg) -> PermGroup:
    """Embed G <= Aut(base) into Aut(subdivision): V-vertices move as before,
    E-vertices move with their underlying edges. Faithful, so orders agree."""
    base = sg.base
    validate_automorphisms(base, G)
    index = base.edge_index()
    n = base.n
    gens = []
    for p in G.generators:
        images = list(p.images)
        for u, v in sg.edge_of:
            a, b = p.images[u], p.images[v]
            images.append(n + index[(a, b) if a < b else (b, a)])
        gens.append(Perm(images))
    return PermGroup(n + base.m, gens)


# -- derived subgroup and subgroup sampling --------------------------------------


def normal_closure(G: PermGroup, seeds: Sequence[Perm]) -> PermGroup:
    """Smallest normal subgroup of G containing the seeds."""
    chain = StabilizerChain(G.degree, [])
    gens: list[Perm] = []
    work = [s for s in seeds if not s.is_identity()]
    conjugators = list(G.generators) + [g.inverse() for g in G.generators]
    while work:
        x = work.pop()
        if chain.contains(x):
            continue
        chain.add_generator(x)
        gens.append(x)
        for g in conjugators:
            work.append(g.inverse() * x * g)
    return PermGroup(G.degree, gens, _chain=chain)


def derived_subgroup(G: PermGroup) -> PermGroup:
    """The commutator subgroup, as the normal closure of generator commutators."""
    comms = []
    for a in G.generators:
        for b in G.generators:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity():
                comms.append(c)
    return normal_closure(G, comms)


def random_subgroups(G: PermGroup, count: int, seed: int) -> list[PermGroup]:
    """Deterministic-by-seed sampled subgroups, generated by 1-3 random
    elements each; always includes the trivial group and G itself."""
    rng = random.Random(seed)
    out = [trivial_group(G.degree), G]
    if not G.generators:
        return out
    for _ in range(count):
        k = rng.randint(1, 3)
        elems = [G.random_element(rng) for _ in range(k)]
        out.append(PermGroup(G.degree, elems))
    return out
