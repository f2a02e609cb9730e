"""Acyclic orientations of chordal graphs with a prescribed number of dependent arcs.

A chordal graph is rebuilt from a single vertex by re-adding the vertices of
a perfect elimination ordering in reverse, each one simplicial on a clique Q
of size q.  Each re-added vertex v is oriented in one of two ways:

* source extension: v -> w for every w in Q.  Adds exactly q - 1 dependent
  arcs and leaves the dependence of old arcs unchanged.
* insertion extension: pick consecutive clique vertices w_k -> w_{k+1} (in
  topological order) whose arc is dependent in the current orientation,
  point w_1..w_k into v and v out to w_{k+1}..w_q.  Adds exactly q - 2.

Source extensions cover every count from d_min(G) + q - 1 upwards, so the
only count that needs an insertion is d_min(G') = d_min(G) + q - 2, and that
happens only when a minimum orientation of G has such a dependent
consecutive clique arc.  Minimum counts come from the exhaustive oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .chordal import is_chordal
from .graph import Graph, GraphError, add_simplicial_vertex, component_vertex_sets, induced_subgraph, is_clique
from .oracle import (
    DEFAULT_CAP,
    d_min_exact,
    dependency_spectrum,
    find_orientation,
    min_orientation_with_nontrivial_arc,
)
from .orientation import Arc, Orientation, d_max, dependent_arcs, topological_order

SOURCE = "source_extension"
INSERTION = "insertion_extension"


class PreconditionError(ValueError):
    pass


class NotChordalError(GraphError):
    def __init__(self, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__("graph is not chordal; chordless cycle " + " ".join(map(str, witness)))


class InfeasibleTargetError(ValueError):
    def __init__(self, target: int, d_min: int | None, d_max: int):
        self.target = target
        self.d_min = d_min
        self.d_max = d_max
        lo = "?" if d_min is None else d_min
        super().__init__(f"target {target} outside feasible range [{lo}, {d_max}]")


def _clique_order(d: Orientation, q_set: Iterable[int]) -> list[int]:
    q_set = frozenset(q_set)
    if not is_clique(d.graph, q_set):
        raise GraphError(f"{sorted(q_set)} is not a clique")
    pos = {v: i for i, v in enumerate(topological_order(d))}
    return sorted(q_set, key=pos.__getitem__)


def nontrivial_dependent_arc(d: Orientation, q_set: Iterable[int]) -> Arc | None:
    """First arc w_k -> w_{k+1}, consecutive in the clique's topological order,
    that is dependent in ``d``.

    Arcs w_i -> w_j with j - i > 1 are already dependent inside the clique,
    while consecutive ones can only be dependent through vertices outside it,
    so these are exactly the non-trivial dependent arcs of the clique.
    """
    w = _clique_order(d, q_set)
    dependent = dependent_arcs(d).dependent
    for a, b in zip(w, w[1:]):
        if (a, b) in dependent:
            return (a, b)
    return None


def source_extension(d: Orientation, q_set: Iterable[int], v: int | None = None) -> Orientation:
    """Add a vertex adjacent to the clique ``q_set`` as a source: d(D') = d(D) + q - 1."""
    q = _clique_order(d, q_set)
    g2 = add_simplicial_vertex(d.graph, q, v)
    v = g2.vertices[-1] if v is None else v
    return Orientation(g2, d.arcs | {(v, w) for w in q})


def insertion_extension(d: Orientation, q_set: Iterable[int], v: int | None = None) -> Orientation:
    """Add a vertex adjacent to ``q_set`` between the ends of a non-trivial
    dependent clique arc: d(D') = d(D) + q - 2."""
    arc = nontrivial_dependent_arc(d, q_set)
    if arc is None:
        raise PreconditionError("clique has no non-trivial dependent arc")
    w = _clique_order(d, q_set)
    k = w.index(arc[0])
    g2 = add_simplicial_vertex(d.graph, w, v)
    v = g2.vertices[-1] if v is None else v
    new = {(x, v) for x in w[:k + 1]} | {(v, x) for x in w[k + 1:]}
    return Orientation(g2, d.arcs | new)


@dataclass(frozen=True)
class Layer:
    position: int
    vertex: int
    clique: frozenset[int]
    rule: str
    d: int

    @property
    def q(self) -> int:
        return len(self.clique)


@dataclass(frozen=True)
class ComponentPlan:
    """How one connected piece was built.

    ``order`` lists vertices in elimination order (a PEO for chordal input);
    the seed orients the suffix starting at 1-based ``seed_position`` and the
    layers then re-add earlier vertices, deepest first.
    """

    order: tuple[int, ...]
    target: int
    seed_position: int
    seed: Orientation
    seed_d: int
    seed_source: str
    layers: tuple[Layer, ...]
    orientation: Orientation

    def trace_lines(self) -> list[str]:
        size = self.seed.graph.order
        lines = [f"seed     position {self.seed_position}  vertices {size}  d={self.seed_d}  ({self.seed_source})"]
        for layer in self.layers:
            clique = ",".join(map(str, sorted(layer.clique)))
            lines.append(f"layer    position {layer.position}  vertex {layer.vertex}  q={layer.q}  "
                         f"Q={{{clique}}}  {layer.rule}  d={layer.d}")
        return lines


@dataclass(frozen=True)
class SynthesisPlan:
    target: int
    components: tuple[ComponentPlan, ...]
    orientation: Orientation

    def trace(self) -> str:
        lines = [f"target {self.target}"]
        for i, part in enumerate(self.components):
            if len(self.components) > 1:
                lines.append(f"component {i}  vertices {len(part.order)}  target {part.target}")
            lines.extend(part.trace_lines())
        return "\n".join(lines) + "\n"


class _Cache:
    """Per-vertex-set oracle results on induced subgraphs of one graph."""

    def __init__(self, g: Graph, cap: int, table: Mapping[frozenset[int], int] | None = None):
        self.g = g
        self.cap = cap
        self.dmin_cache = dict(table or {})
        self.spec_cache: dict[frozenset[int], frozenset[int]] = {}

    def sub(self, vertices: frozenset[int]) -> Graph:
        return induced_subgraph(self.g, vertices)

    def dmin(self, vertices: frozenset[int]) -> int:
        if vertices not in self.dmin_cache:
            self.dmin_cache[vertices] = d_min_exact(self.sub(vertices), self.cap)
        return self.dmin_cache[vertices]

    def spectrum(self, vertices: frozenset[int]) -> frozenset[int]:
        if vertices not in self.spec_cache:
            self.spec_cache[vertices] = frozenset(dependency_spectrum(self.sub(vertices), self.cap).histogram)
        return self.spec_cache[vertices]


def _upper_bounds(cliques: list[frozenset[int]]) -> list[int]:
    """ub[i] >= d_min of the suffix graph starting at 0-based position i."""
    ub = [0] * len(cliques)
    for i in range(len(cliques) - 2, -1, -1):
        ub[i] = ub[i + 1] + len(cliques[i]) - 1
    return ub


def _assemble(order, cliques, rules, seed, seed_d, seed_source, target) -> ComponentPlan:
    """Re-add order[len(rules)-1], ..., order[0] onto ``seed`` using ``rules``."""
    cur, running = seed, seed_d
    layers = []
    for j in range(len(rules) - 1, -1, -1):
        if rules[j] == SOURCE:
            cur = source_extension(cur, cliques[j], order[j])
            running += len(cliques[j]) - 1
        else:
            cur = insertion_extension(cur, cliques[j], order[j])
            running += len(cliques[j]) - 2
        layers.append(Layer(j + 1, order[j], cliques[j], rules[j], running))
    actual = dependent_arcs(cur).count
    if actual != target or running != target:  # pragma: no cover - each extension has an exact count
        raise AssertionError(f"synthesis produced {actual} dependent arcs, expected {target}")
    return ComponentPlan(tuple(order), target, len(rules) + 1, seed, seed_d, seed_source, tuple(layers), cur)


def _plan_chordal(h: Graph, target: int, cache: _Cache) -> ComponentPlan:
    peo = is_chordal(h).peo
    order, cliques = peo.order, peo.neighborhoods
    n = len(order)
    ub = _upper_bounds(list(cliques))
    suffix = [frozenset(order[i:]) for i in range(n)]

    # Walk down from the whole graph, peeling one simplicial vertex per layer.
    # Source extension works whenever the remainder stays >= d_min of the
    # smaller graph; the one count it misses needs an insertion seeded by a
    # minimum orientation with a non-trivial dependent clique arc.
    rules: list[str] = []
    t = target
    for i in range(n - 1):
        q = len(cliques[i])
        rest = t - (q - 1)
        if rest >= ub[i + 1] or rest >= cache.dmin(suffix[i + 1]):
            rules.append(SOURCE)
            t = rest
            continue
        if q >= 2 and rest == cache.dmin(suffix[i + 1]) - 1:
            seed = min_orientation_with_nontrivial_arc(cache.sub(suffix[i + 1]), cliques[i], cache.cap)
            if seed is not None:
                rules.append(INSERTION)
                return _assemble(order, cliques, rules, seed, rest + 1,
                                 "oracle minimum with non-trivial clique arc", target)
        raise InfeasibleTargetError(target, cache.dmin(suffix[0]), d_max(h))
    if t != 0:
        raise InfeasibleTargetError(target, cache.dmin(suffix[0]), d_max(h))
    return _assemble(order, cliques, rules, Orientation(Graph([order[-1]]), ()), 0, "single vertex", target)


def _peel(g: Graph) -> tuple[list[int], list[frozenset[int]], frozenset[int]]:
    """Strip smallest-id simplicial vertices until none is left (or one vertex)."""
    remaining = set(g.vertices)
    order, cliques = [], []
    while len(remaining) > 1:
        for v in sorted(remaining):
            nb = g.adjacency[v] & remaining
            if is_clique(g, nb):
                break
        else:
            break
        order.append(v)
        cliques.append(frozenset(nb))
        remaining.remove(v)
    order.extend(sorted(remaining))
    return order, cliques, frozenset(remaining)


def _plan_with_core(g: Graph, target: int, cache: _Cache) -> ComponentPlan:
    order, cliques, core = _peel(g)
    suffix = [frozenset(order[i:]) for i in range(len(cliques) + 1)]
    spectrum = cache.spectrum(suffix[0])
    if target not in spectrum:
        raise InfeasibleTargetError(target, min(spectrum), d_max(g))
    rules: list[str] = []
    t = target
    for i, clique in enumerate(cliques):
        q = len(clique)
        rest = t - (q - 1)
        if rest in cache.spectrum(suffix[i + 1]):
            rules.append(SOURCE)
            t = rest
            continue
        if q >= 2:
            seed = find_orientation(cache.sub(suffix[i + 1]), rest + 1, rest + 1, clique, cache.cap)
            if seed is not None:
                rules.append(INSERTION)
                return _assemble(order, cliques, rules, seed, rest + 1,
                                 "oracle orientation with non-trivial clique arc", target)
        break
    seed = find_orientation(cache.sub(suffix[len(rules)]), t, t, (), cache.cap)
    return _assemble(order, cliques, rules, seed, t, "oracle orientation", target)


def plan_synthesis(
    g: Graph,
    target: int,
    cap: int = DEFAULT_CAP,
    d_min_table: Mapping[frozenset[int], int] | None = None,
    core_oracle: bool = False,
) -> SynthesisPlan:
    """Build an acyclic orientation of chordal ``g`` with exactly ``target`` dependent arcs.

    ``d_min_table`` maps vertex sets to known d_min values of their induced
    subgraphs and spares the oracle for those.  Targets at or above the sum of
    (q - 1) over the elimination ordering never consult the oracle, so those
    run at any size.

    Non-chordal input raises ``NotChordalError`` unless ``core_oracle`` is
    set; then simplicial vertices are peeled off until a core without
    simplicial vertices remains, and the core is handled by the oracle
    (the whole graph must be within ``cap``).
    """
    verdict = is_chordal(g)
    if not verdict:
        if not core_oracle:
            raise NotChordalError(verdict.witness)
        cache = _Cache(g, cap)
        plan = _plan_with_core(g, target, cache)
        return SynthesisPlan(target, (plan,), plan.orientation)

    cache = _Cache(g, cap, d_min_table)
    top = d_max(g)
    parts = [frozenset(s) for s in component_vertex_sets(g)]
    ubs = [_upper_bounds(list(is_chordal(cache.sub(s)).peo.neighborhoods))[0] for s in parts]

    if target > top:
        low = sum(cache.dmin(s) for s in parts) if g.size <= cap else None
        raise InfeasibleTargetError(target, low, top)
    if target >= sum(ubs):
        lows = ubs
    else:
        lows = [cache.dmin(s) for s in parts]
        if target < sum(lows):
            raise InfeasibleTargetError(target, sum(lows), top)

    # d_max is additive over components: fill each component in turn.
    extra = target - sum(lows)
    plans = []
    for s, low in zip(parts, lows):
        h = cache.sub(s)
        add = min(extra, d_max(h) - low)
        extra -= add
        plans.append(_plan_chordal(h, low + add, cache))
    arcs = frozenset().union(*(p.orientation.arcs for p in plans))
    return SynthesisPlan(target, tuple(plans), Orientation(g, arcs))


def synthesize(g: Graph, target: int, cap: int = DEFAULT_CAP,
               d_min_table: Mapping[frozenset[int], int] | None = None,
               core_oracle: bool = False) -> Orientation:
    return plan_synthesis(g, target, cap, d_min_table, core_oracle).orientation


def random_chordal(n: int, max_q: int, seed: int) -> Graph:
    """Random connected chordal graph grown from K1 by simplicial additions.

    Each new vertex draws q uniformly from 1..min(max_q, current size), then
    attaches to a random clique grown greedily inside the closed
    neighbourhood of a random existing vertex (possibly smaller than q when
    that neighbourhood has no larger clique).
    """
    if n < 1 or max_q < 1:
        raise ValueError("need n >= 1 and max_q >= 1")
    rng = random.Random(seed)
    adj: dict[int, set[int]] = {0: set()}
    edges = []
    for new in range(1, n):
        q = rng.randint(1, min(max_q, new))
        base = rng.randrange(new)
        pool = sorted(adj[base] | {base})
        rng.shuffle(pool)
        clique: list[int] = []
        for c in pool:
            if len(clique) == q:
                break
            if all(c in adj[x] for x in clique):
                clique.append(c)
        adj[new] = set(clique)
        for c in clique:
            adj[c].add(new)
            edges.append((c, new))
    return Graph(range(n), edges)
