"""Exhaustive ground truth over all acyclic orientations of small graphs.

Enumeration runs in the kernels (see ``fullorient.kernels``); orientations
come out in lexicographic order of their direction vector, where edges are
ordered by (larger endpoint, smaller endpoint) of the graph's sorted vertex
list and bit 1 means the edge points from the larger to the smaller vertex.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .chromatic import chromatic_polynomial_eval
from .graph import Graph, GraphError, add_simplicial_vertex, is_clique
from .orientation import Orientation, is_acyclic, topological_order

DEFAULT_CAP = 24
POLYNOMIAL_CHECK_MAX_VERTICES = 10


class CapExceededError(RuntimeError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"graph has {size} edges, enumeration cap is {cap} (raise it with --cap)")


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""


@dataclass(frozen=True)
class SpectrumResult:
    histogram: dict[int, int]
    d_min: int
    d_max_observed: int
    total_acyclic: int
    fully_orientable: bool

    @classmethod
    def from_counts(cls, counts: list[int]) -> SpectrumResult:
        hist = {d: c for d, c in enumerate(counts) if c}
        keys = sorted(hist)
        return cls(
            histogram=hist,
            d_min=keys[0],
            d_max_observed=keys[-1],
            total_acyclic=sum(hist.values()),
            fully_orientable=len(keys) == keys[-1] - keys[0] + 1,
        )

    @property
    def keys(self) -> list[int]:
        return sorted(self.histogram)

    def gaps(self) -> list[int]:
        return [d for d in range(self.d_min, self.d_max_observed + 1) if d not in self.histogram]

    def as_dict(self) -> dict:
        return {
            "d_min": self.d_min,
            "d_max": self.d_max_observed,
            "histogram": {str(d): self.histogram[d] for d in self.keys},
            "fully_orientable": self.fully_orientable,
            "total_acyclic": self.total_acyclic,
        }


def dense_form(g: Graph) -> tuple[int, list[int]]:
    """(n, neighbour bitmasks) over the positions of ``g.vertices``."""
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * g.order
    for u, v in g.edges:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return g.order, adj


def _from_masks(g: Graph, out: Iterable[int]) -> Orientation:
    verts = g.vertices
    arcs = []
    for i, mask in enumerate(out):
        j = 0
        while mask:
            if mask & 1:
                arcs.append((verts[i], verts[j]))
            mask >>= 1
            j += 1
    return Orientation(g, arcs)


def _guard(g: Graph, cap: int) -> None:
    if g.size > cap:
        raise CapExceededError(g.size, cap)


def canonical_edges(g: Graph) -> list[tuple[int, int]]:
    return sorted(g.edges, key=lambda e: (e[1], e[0]))


def direction_vector(d: Orientation) -> tuple[int, ...]:
    return tuple(0 if (u, v) in d.arcs else 1 for u, v in canonical_edges(d.graph))


def enumerate_acyclic_orientations(g: Graph, cap: int = DEFAULT_CAP) -> Iterator[Orientation]:
    _guard(g, cap)
    n, adj = dense_form(g)
    return (_from_masks(g, out) for out in kernels.iter_orientations(n, adj))


def _histogram_part(args):
    return kernels.histogram(*args)


def dependency_spectrum(g: Graph, cap: int = DEFAULT_CAP, jobs: int = 1) -> SpectrumResult:
    """Histogram of d(D) over every acyclic orientation D of ``g``.

    With ``jobs > 1`` the search tree is split into ``jobs`` interleaved
    parts evaluated in worker processes; the merged result is identical.
    """
    _guard(g, cap)
    n, adj = dense_form(g)
    if jobs <= 1 or n < 2:
        return SpectrumResult.from_counts(kernels.histogram(n, adj))
    split = n // 2
    tasks = [(n, adj, split, part, jobs) for part in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_histogram_part, tasks))
    return SpectrumResult.from_counts([sum(col) for col in zip(*parts)])


def d_min_exact(g: Graph, cap: int = DEFAULT_CAP) -> int:
    _guard(g, cap)
    return kernels.min_dependent(*dense_form(g))


def count_acyclic_orientations(g: Graph, cap: int = DEFAULT_CAP, check: bool = True) -> int:
    """Number of acyclic orientations, cross-checked against |P(G, -1)|."""
    total = dependency_spectrum(g, cap).total_acyclic
    if check and g.order <= POLYNOMIAL_CHECK_MAX_VERTICES:
        expected = abs(chromatic_polynomial_eval(g, -1))
        if expected != total:
            raise ConsistencyError(f"enumeration found {total} acyclic orientations, |P(G,-1)| = {expected}")
    return total


def find_orientation(
    g: Graph, lo: int, hi: int, clique: Iterable[int] = (), cap: int = DEFAULT_CAP
) -> Orientation | None:
    """First orientation in enumeration order with lo <= d(D) <= hi.

    A non-empty ``clique`` additionally requires a non-trivial dependent arc
    inside it (a dependent arc joining clique vertices that are consecutive
    in the topological order).
    """
    clique = frozenset(clique)
    if clique and not is_clique(g, clique):
        raise GraphError(f"{sorted(clique)} is not a clique")
    _guard(g, cap)
    if len(clique) == 1:
        return None
    n, adj = dense_form(g)
    index = {v: i for i, v in enumerate(g.vertices)}
    mask = 0
    for v in clique:
        mask |= 1 << index[v]
    out = kernels.first_match(n, adj, mask, lo, hi)
    return None if out is None else _from_masks(g, out)


def min_orientation_with_nontrivial_arc(
    g: Graph, q_set: Iterable[int], cap: int = DEFAULT_CAP, bound: int | None = None
) -> Orientation | None:
    """First orientation with a non-trivial dependent arc inside ``q_set``.

    Strict form (``bound=None``): only orientations with d(D) = d_min(G) are
    considered, so a result exists iff adding a simplicial vertex on
    ``q_set`` lowers d_min by q - 2 rather than q - 1.  With ``bound`` the
    search accepts any d(D) <= bound.
    """
    q_set = frozenset(q_set)
    if not is_clique(g, q_set):
        raise GraphError(f"{sorted(q_set)} is not a clique")
    if len(q_set) < 2:
        return None
    if bound is None:
        lo = hi = d_min_exact(g, cap)
    else:
        lo, hi = 0, bound
    return find_orientation(g, lo, hi, q_set, cap)


def enumerate_extensions(d: Orientation, q_set: Iterable[int], vertex: int | None = None) -> Iterator[Orientation]:
    """Every acyclic orientation of G + (simplicial vertex on q_set) restricting to ``d``."""
    q = sorted(q_set)
    g2 = add_simplicial_vertex(d.graph, q, vertex)
    v = (set(g2.vertices) - set(d.graph.vertices)).pop()
    topological_order(d)
    for mask in range(1 << len(q)):
        arcs = set(d.arcs)
        arcs.update((v, w) if mask >> i & 1 else (w, v) for i, w in enumerate(q))
        ext = Orientation(g2, arcs)
        if is_acyclic(ext):
            yield ext
