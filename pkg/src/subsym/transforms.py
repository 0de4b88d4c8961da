"""Subdivision graph, line graph, distance-2 graph, and reconstruction.

The subdivision of a graph on n vertices and m edges keeps the original ids
0..n-1 ("V-vertices") and assigns ids n..n+m-1 to the new mid-edge vertices
("E-vertices"), in sorted edge-list order. That numbering is fixed so induced
group actions and fixture files are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    make_cycle,
    metrics,
)

V_PART = "V"
E_PART = "E"


class MalformedSubdivisionError(GraphError):
    pass


@dataclass(frozen=True, slots=True)
class SubdivisionGraph:
    """A subdivision graph with its part labelling.

    graph: the ambient graph on n+m vertices.
    part: per-vertex tag, V_PART for original vertices, E_PART for mid-edge ones.
    edge_of: for each E-vertex (in id order n, n+1, ...), the original edge (u, v).
    base: the original graph.
    """

    graph: Graph
    part: tuple[str, ...]
    edge_of: tuple[tuple[int, int], ...]
    base: Graph

    @property
    def n_base(self) -> int:
        return self.base.n

    @property
    def m_base(self) -> int:
        return self.base.m

    def is_v_vertex(self, x: int) -> bool:
        return self.part[x] == V_PART


@dataclass(frozen=True, slots=True)
class Component:
    """A connected component, relabelled to 0..k-1.

    vertices[i] is the original id of the component's vertex i.
    """

    vertices: tuple[int, ...]
    graph: Graph


@dataclass(frozen=True, slots=True)
class DeltaReport:
    d: int
    diam_s: int
    delta: int


def subdivide(g: Graph) -> SubdivisionGraph:
    """The subdivision graph: one new vertex in the middle of each edge."""
    n, m = g.n, g.m
    edges = []
    for i, (u, v) in enumerate(g.edge_list):
        e = n + i
        edges.append((u, e))
        edges.append((v, e))
    sg = Graph(n + m, edges)
    part = tuple([V_PART] * n + [E_PART] * m)
    return SubdivisionGraph(graph=sg, part=part, edge_of=g.edge_list, base=g)


def line_graph(g: Graph) -> Graph:
    """Line graph on m vertices; vertex i is edge g.edge_list[i]."""
    m = g.m
    edges = set()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edge_list):
        incident[u].append(i)
        incident[v].append(i)
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                edges.add((ids[a], ids[b]))
    return Graph(m, sorted(edges))


def distance_two_graph(g: Graph) -> list[Component]:
    """The distance-2 graph split into connected components.

    Isolated vertices come back as singleton components, so e.g. K_n yields n
    of them. A connected bipartite input yields exactly two components.
    Components are ordered by smallest original vertex id.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("distance-2 graph requires a connected input")
    dist = g.distances_matrix()
    pairs = np.argwhere(np.triu(dist == 2))
    edges = [(int(u), int(v)) for u, v in pairs]
    ambient = Graph(g.n, edges)
    return split_components(ambient)


def split_components(g: Graph) -> list[Component]:
    """Connected components of g, each relabelled to 0..k-1."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        verts = []
        while stack:
            v = stack.pop()
            verts.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        verts.sort()
        index = {v: i for i, v in enumerate(verts)}
        sub_edges = [
            (index[u], index[v]) for u, v in g.edge_list if u in index and v in index
        ]
        comps.append(Component(vertices=tuple(verts), graph=Graph(len(verts), sub_edges)))
    return comps


def reconstruct(sg: SubdivisionGraph, forget_labels: bool = False) -> Graph:
    """Recover the original graph from its subdivision.

    With labels, this is exact: each E-vertex contributes its original edge.
    With forget_labels the part tags are ignored and only the ambient graph is
    used; the result is then isomorphic to the original (a cycle C_{2n} comes
    back as the canonical C_n, since cycles subdivide to cycles).
    """
    if not forget_labels:
        return Graph(sg.n_base, sg.edge_of)
    return reconstruct_from_ambient(sg.graph)


def reconstruct_from_ambient(gamma: Graph) -> Graph:
    """Label-free reconstruction from the ambient subdivision graph.

    The original graph is the unique component of the distance-2 graph that
    contains vertices of ambient valency other than 2; if every valency is 2
    the ambient graph is a cycle and the canonical half-length cycle is
    returned.
    """
    if gamma.n < 3:
        raise MalformedSubdivisionError("ambient graph too small to be a subdivision")
    if not gamma.is_connected():
        raise MalformedSubdivisionError("ambient subdivision graph must be connected")
    if all(gamma.degree(v) == 2 for v in range(gamma.n)):
        if gamma.n % 2 != 0:
            raise MalformedSubdivisionError(
                "cycle of odd length is not a subdivision graph"
            )
        return make_cycle(gamma.n // 2)
    comps = distance_two_graph(gamma)
    candidates = [
        c for c in comps if any(gamma.degree(v) != 2 for v in c.vertices)
    ]
    if len(candidates) != 1:
        raise MalformedSubdivisionError(
            "ambient graph does not reconstruct to a unique component"
        )
    return candidates[0].graph


def subdivision_distance(sg: SubdivisionGraph, a: int, b: int) -> int:
    """Distance in the subdivision graph by the closed three-case formula
    (2d for V/V, 2*min+1 for V/E, 2*min+2 for E/E), not by BFS."""
    g = sg.graph
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise GraphError("vertex id out of range for subdivision graph")
    if a == b:
        return 0
    dist = sg.base.distances_matrix()
    n = sg.n_base
    a_is_v = sg.is_v_vertex(a)
    b_is_v = sg.is_v_vertex(b)
    if a_is_v and b_is_v:
        return 2 * int(dist[a, b])
    if a_is_v != b_is_v:
        if b_is_v:
            a, b = b, a
        u, v = sg.edge_of[b - n]
        return 2 * min(int(dist[a, u]), int(dist[a, v])) + 1
    x, u = sg.edge_of[a - n]
    y, v = sg.edge_of[b - n]
    return (
        2
        * min(int(dist[x, y]), int(dist[x, v]), int(dist[y, u]), int(dist[u, v]))
        + 2
    )


def subdivision_distance_matrix(sg: SubdivisionGraph) -> np.ndarray:
    """All subdivision-graph distances by the closed formula, vectorised.

    Same three cases as subdivision_distance; the diagonal of the E/E block is
    zeroed since the formula's minimum is over two distinct edges.
    """
    d = sg.base.distances_matrix()
    n, m = sg.n_base, sg.m_base
    out = np.empty((n + m, n + m), dtype=np.int32)
    out[:n, :n] = 2 * d
    if m:
        u = np.fromiter((e[0] for e in sg.edge_of), dtype=np.int64, count=m)
        v = np.fromiter((e[1] for e in sg.edge_of), dtype=np.int64, count=m)
        ve = 2 * np.minimum(d[:, u], d[:, v]) + 1
        out[:n, n:] = ve
        out[n:, :n] = ve.T
        ee = np.minimum(
            np.minimum(d[np.ix_(u, u)], d[np.ix_(u, v)]),
            np.minimum(d[np.ix_(v, u)], d[np.ix_(v, v)]),
        )
        ee = 2 * ee + 2
        np.fill_diagonal(ee, 0)
        out[n:, n:] = ee
    return out


def delta_of(g: Graph) -> DeltaReport:
    """diam(S(g)) = 2*diam(g) + delta with delta in {0, 1, 2}.

    diam(S(g)) is measured by BFS on the actual subdivision graph; the
    delta=2 case is cross-checked against its witness criterion (two edges
    whose four cross-distances all equal diam(g)).
    """
    if g.n < 2:
        raise GraphError("need at least 2 vertices")
    d = metrics(g).diameter
    sg = subdivide(g)
    diam_s = metrics(sg.graph).diameter
    delta = diam_s - 2 * d
    if delta not in (0, 1, 2):
        raise AssertionError(f"delta out of range: {delta}")
    if (delta == 2) != _has_delta2_witness(g, d):
        raise AssertionError("delta=2 witness criterion disagrees with BFS diameter")
    return DeltaReport(d=d, diam_s=diam_s, delta=delta)


def _has_delta2_witness(g: Graph, d: int) -> bool:
    dist = g.distances_matrix()
    edges = g.edge_list
    for i in range(len(edges)):
        x, y = edges[i]
        for j in range(i + 1, len(edges)):
            u, v = edges[j]
            if (
                dist[x, u] == d
                and dist[x, v] == d
                and dist[y, u] == d
                and dist[y, v] == d
            ):
                return True
    return False


def delta2_witness(g: Graph) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
    """An edge pair witnessing delta=2, or None."""
    d = metrics(g).diameter
    dist = g.distances_matrix()
    edges = g.edge_list
    for i in range(len(edges)):
        x, y = edges[i]
        for j in range(i + 1, len(edges)):
            u, v = edges[j]
            if (
                dist[x, u] == d
                and dist[x, v] == d
                and dist[y, u] == d
                and dist[y, v] == d
            ):
                return (edges[i], edges[j])
    return None
