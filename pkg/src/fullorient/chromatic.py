"""Chromatic polynomials by deletion-contraction.

Used as an independent check on orientation enumeration: the number of
acyclic orientations of G equals |P(G, -1)| (Stanley).  Polynomials are
coefficient lists, lowest degree first.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph

Poly = tuple[int, ...]


def _sub(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return tuple((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n))


def _add(p: Poly, q: Poly) -> Poly:
    return _sub(p, tuple(-c for c in q))


def _times_linear(p: Poly, k: int) -> Poly:
    """p(x) * (x - k)."""
    out = [0] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i + 1] += c
        out[i] -= k * c
    return tuple(out)


def _canon(n: int, edges) -> tuple[int, frozenset]:
    return n, frozenset((u, v) if u < v else (v, u) for u, v in edges)


def _drop_vertex(n: int, edges: frozenset, v: int) -> tuple[int, frozenset]:
    shift = lambda x: x - 1 if x > v else x  # noqa: E731
    return _canon(n - 1, ((shift(a), shift(b)) for a, b in edges if v not in (a, b)))


def _contract(n: int, edges: frozenset, u: int, v: int) -> tuple[int, frozenset]:
    """Merge v into u (u < v), then drop v's index."""
    merged = set()
    for a, b in edges:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((a, b) if a < b else (b, a))
    return _drop_vertex(n, frozenset(merged), v)


@lru_cache(maxsize=None)
def _poly(n: int, edges: frozenset) -> Poly:
    if not edges:
        return (0,) * n + (1,)
    adj = [set() for _ in range(n)]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    # A simplicial vertex of degree k contributes the factor (x - k).
    for v in range(n):
        nb = sorted(adj[v])
        if all(b in adj[a] for i, a in enumerate(nb) for b in nb[i + 1:]):
            return _times_linear(_poly(*_drop_vertex(n, edges, v)), len(nb))
    if 2 * len(edges) > n * (n - 1) // 2:
        # Dense: P(G) = P(G + e) + P(G / e) over a missing edge e.
        u, v = next((a, b) for a in range(n) for b in range(a + 1, n) if b not in adj[a])
        return _add(_poly(*_canon(n, edges | {(u, v)})), _poly(*_contract(n, edges, u, v)))
    u, v = max(edges, key=lambda e: (len(adj[e[0]]) + len(adj[e[1]]), e))
    return _sub(_poly(n, edges - {(u, v)}), _poly(*_contract(n, edges, u, v)))


def chromatic_polynomial(g: Graph) -> list[int]:
    h, _ = g.normalized()
    return list(_poly(h.order, h.edges))


def evaluate(poly: list[int] | Poly, x: int) -> int:
    total = 0
    for c in reversed(poly):
        total = total * x + c
    return total


def chromatic_polynomial_eval(g: Graph, x: int) -> int:
    return evaluate(chromatic_polynomial(g), x)
