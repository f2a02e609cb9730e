"""Pure-Python enumeration kernel.

Graphs arrive dense: vertices 0..n-1, ``adj[k]`` a bitmask of neighbours.
Vertices are added one at a time; vertex k chooses a direction for each edge
to a smaller neighbour.  Edge groups are ordered by larger endpoint and,
inside a group, by smaller endpoint; the direction bit of edge (a, k) is 0
for a -> k and 1 for k -> a.  Choices are tried in increasing order of the
group's bit vector (first edge most significant), so orientations come out in
lexicographic order of the full direction vector.

A choice is kept only if no new out-neighbour of k already reaches a new
in-neighbour, so every leaf is an acyclic orientation and each one appears
exactly once.

``split``/``part``/``nparts`` partition the search: the subtrees rooted at
vertex ``split`` are numbered in enumeration order and only those with
``index % nparts == part`` are explored.
"""

from __future__ import annotations

from typing import Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def dependent_count(out: Sequence[int], desc: Sequence[int]) -> int:
    total = 0
    for o in out:
        via = 0
        for w in _bits(o):
            via |= desc[w]
        total += bin(o & via).count("1")
    return total


def has_nontrivial(out: Sequence[int], desc: Sequence[int], clique: int) -> bool:
    """Whether some arc u -> v consecutive in the clique order is dependent."""
    for u in _bits(clique):
        inside = out[u] & clique
        via = 0
        for w in _bits(out[u]):
            via |= desc[w]
        for v in _bits(inside & via):
            if not any(out[w] >> v & 1 for w in _bits(inside & ~(1 << v))):
                return True
    return False


def _walk(n: int, adj: Sequence[int], split: int, part: int, nparts: int) -> Iterator[tuple[list[int], list[int]]]:
    out = [0] * n
    desc = [0] * n
    counter = [0]
    lower = [adj[k] & ((1 << k) - 1) for k in range(n)]
    if split >= n and part % nparts:
        # nothing to split on: part 0 takes the whole tree
        return

    def rec(k: int):
        if k == n:
            yield out, desc
            return
        nbrs = list(_bits(lower[k]))
        deg = len(nbrs)
        for x in range(1 << deg):
            ins = outs = 0
            for j, a in enumerate(nbrs):
                if x >> (deg - 1 - j) & 1:
                    outs |= 1 << a
                else:
                    ins |= 1 << a
            below = outs
            for t in _bits(outs):
                below |= desc[t]
            if below & ins:
                continue
            if k == split:
                idx = counter[0]
                counter[0] += 1
                if idx % nparts != part:
                    continue
            saved_out = out[:k]
            saved_desc = desc[:k]
            reach_k = (1 << k) | below
            for a in range(k):
                if ins >> a & 1 or desc[a] & ins:
                    desc[a] |= reach_k
            for s in _bits(ins):
                out[s] |= 1 << k
            out[k] = outs
            desc[k] = below
            yield from rec(k + 1)
            out[:k] = saved_out
            desc[:k] = saved_desc
        out[k] = desc[k] = 0

    yield from rec(0)


def iter_orientations(n: int, adj: Sequence[int], split: int = 0, part: int = 0, nparts: int = 1) -> Iterator[tuple[int, ...]]:
    """Yield the out-neighbour masks of every acyclic orientation."""
    for out, _ in _walk(n, adj, split, part, nparts):
        yield tuple(out)


def histogram(n: int, adj: Sequence[int], split: int = 0, part: int = 0, nparts: int = 1) -> list[int]:
    """counts[d] = number of acyclic orientations with d dependent arcs."""
    m = sum(bin(a).count("1") for a in adj) // 2
    counts = [0] * (m + 1)
    for out, desc in _walk(n, adj, split, part, nparts):
        counts[dependent_count(out, desc)] += 1
    return counts


def min_dependent(n: int, adj: Sequence[int]) -> int:
    best = None
    for out, desc in _walk(n, adj, 0, 0, 1):
        d = dependent_count(out, desc)
        if best is None or d < best:
            best = d
            if best == 0:
                break
    return best


def first_match(n: int, adj: Sequence[int], clique: int, lo: int, hi: int) -> tuple[int, ...] | None:
    """First orientation (in enumeration order) with lo <= d <= hi and, when
    ``clique`` is non-zero, a non-trivial dependent arc inside the clique."""
    for out, desc in _walk(n, adj, 0, 0, 1):
        d = dependent_count(out, desc)
        if lo <= d <= hi and (not clique or has_nontrivial(out, desc, clique)):
            return tuple(out)
    return None
