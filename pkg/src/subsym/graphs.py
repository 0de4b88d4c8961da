"""Immutable simple graphs: named constructions, exact metrics, s-arc enumeration.

Vertices are dense integer ids 0..n-1. All operations are pure; a Graph never
changes after construction, so everything here is safe to call concurrently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels

UNREACHED = -1  # sentinel used by distance arrays for disconnected pairs


class GraphError(ValueError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``;
    ``edge_list`` is the sorted tuple of edges as pairs (u, v) with u < v.
    """

    __slots__ = (
        "n",
        "adjacency",
        "edge_list",
        "_indptr",
        "_indices",
        "_apsp",
        "_edge_index",
        "_neighbor_masks",
        "__weakref__",
    )

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        edge_list = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_list:
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        self.edge_list = edge_list
        self._indptr = None
        self._indices = None
        self._apsp = None
        self._edge_index = None
        self._neighbor_masks = None

    @property
    def m(self) -> int:
        return len(self.edge_list)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_list == other.edge_list

    def __hash__(self) -> int:
        return hash((self.n, self.edge_list))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- internal CSR / cache helpers -------------------------------------

    def _csr(self):
        if self._indptr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int32)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self.adjacency[v])
            indices = np.fromiter(
                (w for a in self.adjacency for w in a), dtype=np.int32, count=2 * self.m
            )
            self._indptr, self._indices = indptr, indices
        return self._indptr, self._indices

    def distances_matrix(self) -> np.ndarray:
        """All-pairs hop distances; UNREACHED (-1) marks disconnected pairs."""
        if self._apsp is None:
            indptr, indices = self._csr()
            self._apsp = kernels.all_pairs_distances(indptr, indices, self.n)
        return self._apsp

    def edge_index(self) -> dict[tuple[int, int], int]:
        """Index of each edge in sorted edge_list order."""
        if self._edge_index is None:
            self._edge_index = {e: i for i, e in enumerate(self.edge_list)}
        return self._edge_index

    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbour sets as int bitmasks (for refinement code)."""
        if self._neighbor_masks is None:
            masks = []
            for a in self.adjacency:
                m = 0
                for w in a:
                    m |= 1 << w
                masks.append(m)
            self._neighbor_masks = tuple(masks)
        return self._neighbor_masks

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return int((self.bfs_from(0) >= 0).sum()) == self.n

    def bfs_from(self, v: int) -> np.ndarray:
        indptr, indices = self._csr()
        return kernels.bfs_distances(indptr, indices, self.n, v)


@dataclass(frozen=True, slots=True)
class SArc:
    """An s-arc: a walk (v_0,...,v_s) with no immediate backtracking."""

    vertices: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.vertices) - 1

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 2:
            raise GraphError("an s-arc needs at least two vertices")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"({a}, {b}) is not an edge")
        for j in range(1, len(vs) - 1):
            if vs[j - 1] == vs[j + 1]:
                raise GraphError(f"immediate backtrack at position {j}")


@dataclass(frozen=True, slots=True)
class Metrics:
    """diameter, girth (None = acyclic) and bipartition (None = not bipartite)."""

    diameter: int
    girth: Optional[int]
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]]


# -- named constructions ----------------------------------------------------


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def make_complete_bipartite(m: int, n: int) -> Graph:
    """Biparts {0..m-1} and {m..m+n-1}."""
    if m < 1 or n < 1:
        raise GraphError("complete bipartite graph needs m, n >= 1")
    return Graph(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def make_petersen() -> Graph:
    """Kneser construction: vertices are 2-subsets of {1..5} in lexicographic
    order ((1,2) = 0, ..., (4,5) = 9); adjacency is disjointness."""
    pairs = [(a, b) for a in range(1, 6) for b in range(a + 1, 6)]
    edges = []
    for i, p in enumerate(pairs):
        for j in range(i + 1, 10):
            q = pairs[j]
            if not (set(p) & set(q)):
                edges.append((i, j))
    return Graph(10, edges)


def petersen_vertex_pairs() -> tuple[tuple[int, int], ...]:
    """The 2-subset behind each Petersen vertex id (documents the id scheme)."""
    return tuple((a, b) for a in range(1, 6) for b in range(a + 1, 6))


def make_hoffman_singleton() -> Graph:
    """Robertson construction: pentagons P_h (vertices 5h+j, j in Z_5, edges
    j ~ j+-1), pentagrams Q_k (vertices 25+5k+j, edges j ~ j+-2), and cross
    edges P_{h,j} ~ Q_{k, (h*k+j) mod 5}.

    The four defining facts (50 vertices, 7-regular, girth 5, diameter 2) are
    asserted after construction; a failure would mean a construction bug.
    """
    edges = set()
    for h in range(5):
        for j in range(5):
            edges.add(tuple(sorted((5 * h + j, 5 * h + (j + 1) % 5))))
            edges.add(tuple(sorted((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))))
    for h in range(5):
        for j in range(5):
            for k in range(5):
                edges.add(tuple(sorted((5 * h + j, 25 + 5 * k + (h * k + j) % 5))))
    g = Graph(50, sorted(edges))
    if g.n != 50 or any(g.degree(v) != 7 for v in range(50)):
        raise GraphError("Hoffman-Singleton self-check failed: not 7-regular on 50 vertices")
    met = metrics(g)
    if met.girth != 5 or met.diameter != 2:
        raise GraphError("Hoffman-Singleton self-check failed: girth/diameter wrong")
    return g


# -- metric computations ----------------------------------------------------


def bfs_distances(g: Graph, v: int) -> list[int]:
    """Exact hop distances from v; UNREACHED (-1) for unreachable vertices."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    return [int(d) for d in g.bfs_from(v)]


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for acyclic graphs.

    BFS from every vertex; for each non-tree edge {u,w} the walk root->u,
    u-w, w->root closes a cycle of length d[u]+d[w]+1. Every such value is
    >= girth, and equality is attained for roots on a shortest cycle.
    """
    best: Optional[int] = None
    for root in range(g.n):
        dist = g.bfs_from(root)
        parent = [-1] * g.n
        for v in range(g.n):
            if dist[v] > 0:
                for w in g.adjacency[v]:
                    if dist[w] == dist[v] - 1:
                        parent[v] = w
                        break
        for u, w in g.edge_list:
            if dist[u] < 0 or dist[w] < 0:
                continue
            if parent[u] == w or parent[w] == u:
                continue
            c = int(dist[u]) + int(dist[w]) + 1
            if best is None or c < best:
                best = c
        if best == 3:
            return 3
    return best


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    b = frozenset(v for v in range(g.n) if color[v] == 1)
    return (a, b)


def metrics(g: Graph) -> Metrics:
    """Diameter, girth and bipartition. Rejects disconnected graphs."""
    if g.n == 0:
        raise DisconnectedGraphError("empty graph has no diameter")
    dist = g.distances_matrix()
    if int(dist.min()) < 0:
        raise DisconnectedGraphError("diameter undefined for disconnected graph")
    return Metrics(diameter=int(dist.max()), girth=girth(g), bipartition=bipartition(g))


def distance_sphere(g: Graph, v: int, i: int) -> frozenset[int]:
    """The set of vertices at distance exactly i from v (may be empty)."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    if i < 0:
        raise GraphError("sphere radius must be nonnegative")
    dist = g.bfs_from(v)
    return frozenset(int(w) for w in np.flatnonzero(dist == i))


# -- s-arc enumeration ------------------------------------------------------


def _arc_tuples_from(g: Graph, v: int, s: int) -> list[tuple[int, ...]]:
    """All s-arcs starting at v as raw tuples, in lexicographic order."""
    out: list[tuple[int, ...]] = []
    arc = [v]

    def extend() -> None:
        if len(arc) == s + 1:
            out.append(tuple(arc))
            return
        prev = arc[-2] if len(arc) >= 2 else -1
        for w in g.adjacency[arc[-1]]:
            if w != prev:
                arc.append(w)
                extend()
                arc.pop()

    extend()
    return out


def s_arcs_from(g: Graph, v: int, s: int) -> list[SArc]:
    """All s-arcs with initial vertex v, in deterministic lexicographic order."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    if s < 1:
        raise GraphError("arc length must be >= 1")
    return [SArc(t) for t in _arc_tuples_from(g, v, s)]


def enumerate_s_arcs(g: Graph, s: int) -> list[SArc]:
    """All s-arcs of g: union of s_arcs_from over all start vertices."""
    if s < 1:
        raise GraphError("arc length must be >= 1")
    out: list[SArc] = []
    for v in range(g.n):
        out.extend(SArc(t) for t in _arc_tuples_from(g, v, s))
    return out


# -- random graphs (seeded corpus generation) -------------------------------


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random connected graph: random spanning tree plus density-p extras."""
    if n < 2:
        raise GraphError("need n >= 2")
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        j = rng.randrange(i)
        u, v = order[i], order[j]
        edges.add((min(u, v), max(u, v)))
    p = rng.uniform(0.1, 0.5)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph(n, sorted(edges))
