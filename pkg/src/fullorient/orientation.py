"""Orientations of a graph, topological orderings and dependent arcs.

An arc ``(u, v)`` means u -> v.  An arc of an acyclic orientation is
dependent when reversing it closes a directed cycle, which happens exactly
when some directed walk of length at least two runs from u to v.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Graph, GraphError, ParseError, components, induced_subgraph

Arc = tuple[int, int]


class CyclicOrientationError(ValueError):
    """An operation that needs an acyclic orientation received a cyclic one."""

    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        super().__init__("orientation has a directed cycle: " + " -> ".join(map(str, cycle + cycle[:1])))


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    arcs: frozenset[Arc]
    successors: Mapping[int, frozenset[int]] = field(compare=False, repr=False)

    def __init__(self, graph: Graph, arcs: Iterable[Arc]):
        arcs = frozenset((int(u), int(v)) for u, v in arcs)
        seen = set()
        for u, v in arcs:
            e = (u, v) if u < v else (v, u)
            if e not in graph.edges:
                raise GraphError(f"arc {u}>{v} is not an edge of the graph")
            if e in seen:
                raise GraphError(f"edge {e} oriented both ways")
            seen.add(e)
        if len(seen) != graph.size:
            missing = sorted(graph.edges - seen)
            raise GraphError(f"edges left unoriented: {missing[:5]}")
        succ: dict[int, set[int]] = {v: set() for v in graph.vertices}
        for u, v in arcs:
            succ[u].add(v)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "successors", {v: frozenset(s) for v, s in succ.items()})

    def __contains__(self, arc: object) -> bool:
        return arc in self.arcs

    def predecessors(self, v: int) -> frozenset[int]:
        return frozenset(u for u in self.graph.neighbors(v) if v in self.successors[u])

    def reverse_arc(self, arc: Arc) -> Orientation:
        """The orientation with one arc flipped (possibly cyclic)."""
        self._require_arc(arc)
        u, v = arc
        return Orientation(self.graph, (self.arcs - {arc}) | {(v, u)})

    def restrict(self, vertices: Iterable[int]) -> Orientation:
        """The induced orientation D[S]."""
        sub = induced_subgraph(self.graph, vertices)
        keep = set(sub.vertices)
        return Orientation(sub, ((u, v) for u, v in self.arcs if u in keep and v in keep))

    def _require_arc(self, arc: Arc) -> None:
        if tuple(arc) not in self.arcs:
            raise GraphError(f"arc {arc[0]}>{arc[1]} is not in the orientation")

    def __repr__(self) -> str:
        return f"Orientation(n={self.graph.order}, arcs={sorted(self.arcs)})"


@dataclass(frozen=True)
class DependencyReport:
    dependent: frozenset[Arc]

    @property
    def count(self) -> int:
        return len(self.dependent)

    def incident(self, v: int) -> int:
        """Number of dependent arcs touching ``v``."""
        return sum(1 for a in self.dependent if v in a)


def orient_by_ordering(g: Graph, order: Sequence[int]) -> Orientation:
    """Direct every edge from the earlier to the later vertex of ``order``."""
    if sorted(order) != list(g.vertices):
        raise GraphError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    return Orientation(g, ((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges))


def _kahn(d: Orientation) -> list[int]:
    """Smallest-id-first topological sort; shorter than |G| iff cyclic."""
    indeg = {v: 0 for v in d.graph.vertices}
    for _, v in d.arcs:
        indeg[v] += 1
    heap = [v for v, k in indeg.items() if k == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        u = heapq.heappop(heap)
        out.append(u)
        for w in d.successors[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return out


def is_acyclic(d: Orientation) -> bool:
    return len(_kahn(d)) == d.graph.order


def find_cycle(d: Orientation) -> list[int] | None:
    """Some directed cycle as a vertex list, or None for acyclic input."""
    done = set(_kahn(d))
    if len(done) == d.graph.order:
        return None
    # Every leftover vertex has a leftover predecessor; walk backwards until a repeat.
    left = [v for v in d.graph.vertices if v not in done]
    pos: dict[int, int] = {}
    path = []
    v = left[0]
    while v not in pos:
        pos[v] = len(path)
        path.append(v)
        v = min(u for u in d.predecessors(v) if u not in done)
    cycle = path[pos[v]:]
    cycle.reverse()
    return cycle


def topological_order(d: Orientation) -> list[int]:
    """Topological order with ties broken by smallest vertex id."""
    order = _kahn(d)
    if len(order) != d.graph.order:
        raise CyclicOrientationError(find_cycle(d))
    return order


def _reaches(d: Orientation, src: int, dst: int, skip: Arc) -> bool:
    seen = {src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in d.successors[u]:
            if (u, w) == skip or w in seen:
                continue
            if w == dst:
                return True
            seen.add(w)
            queue.append(w)
    return False


def is_dependent(d: Orientation, arc: Arc) -> bool:
    """Whether ``arc`` is dependent: its head stays reachable once it is removed."""
    arc = (int(arc[0]), int(arc[1]))
    d._require_arc(arc)
    topological_order(d)
    return _reaches(d, arc[0], arc[1], skip=arc)


def _dependent_by_closure(d: Orientation, order: list[int]) -> frozenset[Arc]:
    # reach[u]: bitmask of vertices reachable from u by a walk of length >= 1.
    index = {v: i for i, v in enumerate(order)}
    reach = {}
    for u in reversed(order):
        r = 0
        for w in d.successors[u]:
            r |= (1 << index[w]) | reach[w]
        reach[u] = r
    dep = []
    for u in order:
        via = 0
        for w in d.successors[u]:
            via |= reach[w]
        for w in d.successors[u]:
            if via >> index[w] & 1:
                dep.append((u, w))
    return frozenset(dep)


def dependent_arcs(d: Orientation, method: str = "auto") -> DependencyReport:
    """All dependent arcs of an acyclic orientation.

    ``method="search"`` runs one reachability search per arc;
    ``method="closure"`` derives everything from a bitset transitive closure.
    ``auto`` picks the closure once the graph has more than a handful of arcs.
    """
    order = topological_order(d)
    if method == "auto":
        method = "closure" if d.graph.size > 8 else "search"
    if method == "closure":
        return DependencyReport(_dependent_by_closure(d, order))
    if method == "search":
        return DependencyReport(frozenset(a for a in d.arcs if _reaches(d, a[0], a[1], skip=a)))
    raise ValueError(f"unknown method {method!r}")


def d_max(g: Graph) -> int:
    """Maximum number of dependent arcs: ||G|| - |G| + c."""
    c, _ = components(g)
    return g.size - g.order + c


def parse_orientation(g: Graph, text: str, mapping: Mapping[int, int] | None = None) -> Orientation:
    """Read ``u > v`` lines (``#`` comments) into an orientation of ``g``.

    ``mapping`` translates file ids to graph ids, as returned by
    ``parse_edge_list(..., with_mapping=True)``.
    """
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(">")
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"expected 'u > v', got {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {line!r}", lineno)
        if mapping is not None:
            try:
                u, v = mapping[u], mapping[v]
            except KeyError as exc:
                raise ParseError(f"vertex {exc.args[0]} not in graph", lineno) from None
        arcs.append((u, v))
    if len(set(arcs)) != len(arcs):
        raise ParseError("duplicate arc")
    try:
        return Orientation(g, arcs)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def render_orientation(d: Orientation, labels: Mapping[int, int] | None = None) -> str:
    lab = labels or {}
    return "".join(f"{lab.get(u, u)} > {lab.get(v, v)}\n" for u, v in sorted(d.arcs))
