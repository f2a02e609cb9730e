"""Chordal graph recognition via maximum cardinality search.

A graph is chordal iff it has a perfect elimination ordering (PEO): an order
in which every vertex's later neighbours form a clique.  The reverse of an
MCS visit order is a PEO exactly when the graph is chordal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    neighborhoods: tuple[frozenset[int], ...]
    valid: bool

    def __len__(self) -> int:
        return len(self.order)

    def render(self) -> str:
        return " ".join(map(str, self.order))


@dataclass(frozen=True)
class PeoCheck:
    """Outcome of ``verify_peo``; truthy iff the ordering is a PEO.

    On failure ``index`` is the 0-based position of the first vertex whose
    later neighbours are not a clique and ``pair`` two of them that are not
    adjacent.
    """

    ok: bool
    index: int | None = None
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ChordalityVerdict:
    chordal: bool
    peo: EliminationOrdering | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.chordal


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Reversed MCS visit order (ties go to the smallest id)."""
    weight = {v: 0 for v in g.vertices}
    visited: list[int] = []
    unvisited = set(g.vertices)
    while unvisited:
        v = min(unvisited, key=lambda x: (-weight[x], x))
        unvisited.remove(v)
        visited.append(v)
        for w in g.adjacency[v]:
            if w in unvisited:
                weight[w] += 1
    visited.reverse()
    return visited


def _later_neighborhoods(g: Graph, order: Sequence[int]) -> list[frozenset[int]]:
    if sorted(order) != list(g.vertices):
        raise GraphError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    return [frozenset(w for w in g.adjacency[v] if pos[w] > i) for i, v in enumerate(order)]


def verify_peo(g: Graph, order: Sequence[int]) -> PeoCheck:
    for i, later in enumerate(_later_neighborhoods(g, order)):
        members = sorted(later)
        for a, x in enumerate(members):
            for y in members[a + 1:]:
                if not g.has_edge(x, y):
                    return PeoCheck(False, i, (x, y))
    return PeoCheck(True)


def elimination_ordering(g: Graph, order: Sequence[int]) -> EliminationOrdering:
    return EliminationOrdering(tuple(order), tuple(_later_neighborhoods(g, order)),
                               bool(verify_peo(g, order)))


def _chordless_path(g: Graph, x: int, y: int, banned: set[int]) -> list[int] | None:
    """Shortest x-y path avoiding ``banned``; shortest paths are induced."""
    parent = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u]):
            if w in parent or w in banned:
                continue
            parent[w] = u
            if w == y:
                path = [y]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def _cycle_through(g: Graph, v: int, x: int, y: int) -> list[int] | None:
    # Internal path vertices avoid N[v], so v has no chord into the path.
    banned = (set(g.adjacency[v]) | {v}) - {x, y}
    path = _chordless_path(g, x, y, banned)
    return None if path is None else [v] + path


def find_chordless_cycle(g: Graph, hint: tuple[int, int, int] | None = None) -> list[int] | None:
    """A chordless cycle of length >= 4, or None when ``g`` is chordal.

    Every such cycle passes through some vertex v with non-adjacent cycle
    neighbours x, y joined by a path outside N[v]; ``hint`` = (v, x, y) is
    tried first.
    """
    if hint is not None:
        cycle = _cycle_through(g, *hint)
        if cycle is not None:
            return cycle
    for v in g.vertices:
        nb = sorted(g.adjacency[v])
        for i, x in enumerate(nb):
            for y in nb[i + 1:]:
                if not g.has_edge(x, y):
                    cycle = _cycle_through(g, v, x, y)
                    if cycle is not None:
                        return cycle
    return None


def is_chordal(g: Graph) -> ChordalityVerdict:
    order = maximum_cardinality_search(g)
    check = verify_peo(g, order)
    if check:
        return ChordalityVerdict(True, peo=elimination_ordering(g, order))
    hint = (order[check.index], *check.pair)
    witness = find_chordless_cycle(g, hint)
    if witness is None:  # pragma: no cover - MCS failure implies a chordless cycle
        raise AssertionError("MCS ordering failed but no chordless cycle exists")
    return ChordalityVerdict(False, witness=tuple(witness))


def simplicial_clique(g: Graph, peo: EliminationOrdering, position: int) -> frozenset[int]:
    """Later neighbours of the vertex at 1-based ``position`` of a valid PEO."""
    if not peo.valid or sorted(peo.order) != list(g.vertices):
        raise GraphError("not a perfect elimination ordering of this graph")
    if not 1 <= position <= len(peo):
        raise GraphError(f"position {position} outside 1..{len(peo)}")
    return peo.neighborhoods[position - 1]
