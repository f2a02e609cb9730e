"""Named graphs used by the worked example and the test fixtures."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, add_simplicial_vertex

# Triangle of K_{3(2)} that receives the extra simplicial vertex of K'.
KPRIME_TRIANGLE = frozenset({0, 3, 5})


def complete_graph(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(range(n))


def complete_multipartite(parts: int, size: int) -> Graph:
    """K_{r(n)}: ``parts`` independent sets of ``size`` vertices, 0..size-1 first."""
    n = parts * size
    return Graph(range(n), ((u, v) for u, v in combinations(range(n), 2) if u // size != v // size))


def k32() -> Graph:
    """Complete tripartite graph with parts {0,1}, {2,3}, {4,5}."""
    return complete_multipartite(3, 2)


def kprime() -> Graph:
    """K_{3(2)} plus vertex 6 adjacent to the triangle {0, 3, 5}."""
    return add_simplicial_vertex(k32(), KPRIME_TRIANGLE, 6)


def k4_minus_edge() -> Graph:
    """K4 without the edge {2, 3}."""
    return Graph(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
