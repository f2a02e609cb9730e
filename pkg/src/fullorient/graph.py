"""Undirected simple graphs.

Graphs are immutable values.  Vertex ids are non-negative integers; the
edge-list reader normalizes them to 0..n-1, while ``induced_subgraph`` keeps
the ids of the parent graph so that subgraphs stay comparable with it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Vertex or edge outside the graph, or an invalid construction."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]
    adjacency: Mapping[int, frozenset[int]] = field(compare=False, repr=False)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        verts = set(vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            es.add(_edge(u, v))
            verts.add(u)
            verts.add(v)
        if any(not isinstance(x, int) or x < 0 for x in verts):
            raise GraphError("vertex ids must be non-negative integers")
        adj: dict[int, set[int]] = {x: set() for x in verts}
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "edges", frozenset(es))
        object.__setattr__(self, "adjacency", {x: frozenset(n) for x, n in adj.items()})

    @property
    def order(self) -> int:
        """|G|, the number of vertices."""
        return len(self.vertices)

    @property
    def size(self) -> int:
        """||G||, the number of edges."""
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.adjacency

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self.adjacency[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency.get(u, ())

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as (smaller, larger) pairs in sorted order."""
        return sorted(self.edges)

    def relabel(self, mapping: Mapping[int, int]) -> Graph:
        return Graph((mapping[v] for v in self.vertices),
                     ((mapping[u], mapping[v]) for u, v in self.edges))

    def normalized(self) -> tuple[Graph, dict[int, int]]:
        """Relabel to 0..n-1 preserving numeric order; returns (graph, old -> new)."""
        mapping = {v: i for i, v in enumerate(self.vertices)}
        return self.relabel(mapping), mapping

    def __repr__(self) -> str:
        return f"Graph(n={self.order}, m={self.size})"


def _check_vertices(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    unknown = [v for v in s if v not in g]
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    return s


_INT = re.compile(r"\d+")


def parse_edge_list(text: str, *, with_mapping: bool = False):
    """Parse the edge-list format.

    One edge ``u v`` per line, ``#`` starts a comment line, and an optional
    ``n <count>`` header declares vertices 0..count-1 (so isolated vertices
    survive).  Duplicate edges collapse.  Ids are normalized to 0..n-1 in
    numeric order; with ``with_mapping=True`` the original -> normalized map
    is returned alongside the graph.
    """
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not _INT.fullmatch(tokens[1]):
                raise ParseError(f"malformed header {line!r}", lineno)
            verts.update(range(int(tokens[1])))
            continue
        if len(tokens) != 2 or not all(_INT.fullmatch(t) for t in tokens):
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise ParseError(f"self-loop {u} {v}", lineno)
        edges.add(_edge(u, v))
    g, mapping = Graph(verts, edges).normalized()
    return (g, mapping) if with_mapping else g


def render_edge_list(g: Graph, labels: Mapping[int, int] | None = None) -> str:
    """Inverse of ``parse_edge_list``; always writes the ``n`` header.

    The header only round-trips for graphs on 0..n-1, so non-dense graphs are
    normalized first.  ``labels`` maps vertex -> printed id.
    """
    if labels is None:
        g, _ = g.normalized()
        labels = {v: v for v in g.vertices}
    lines = [f"n {g.order}"]
    lines += [f"{labels[u]} {labels[v]}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def components(g: Graph) -> tuple[int, dict[int, int]]:
    """Connected components as (count, vertex -> component id).

    Component ids are assigned in order of each component's smallest vertex.
    """
    labels: dict[int, int] = {}
    count = 0
    for root in g.vertices:
        if root in labels:
            continue
        labels[root] = count
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in labels:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return count, labels


def component_vertex_sets(g: Graph) -> list[frozenset[int]]:
    count, labels = components(g)
    parts: list[set[int]] = [set() for _ in range(count)]
    for v, c in labels.items():
        parts[c].add(v)
    return [frozenset(p) for p in parts]


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = sorted(_check_vertices(g, s))
    return all(g.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1:])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    s = _check_vertices(g, s)
    return Graph(s, ((u, v) for u, v in g.edges if u in s and v in s))


def add_simplicial_vertex(g: Graph, q_set: Iterable[int], vertex: int | None = None) -> Graph:
    """Return G' = G plus a new vertex adjacent to exactly the clique ``q_set``."""
    q_set = _check_vertices(g, q_set)
    if not is_clique(g, q_set):
        raise GraphError(f"{sorted(q_set)} is not a clique")
    if vertex is None:
        vertex = g.vertices[-1] + 1 if g.vertices else 0
    elif vertex in g:
        raise GraphError(f"vertex {vertex} already present")
    return Graph(g.vertices + (vertex,), g.edges | {_edge(vertex, w) for w in q_set})
