import importlib
import random

import pytest

from oracles import brute_spectrum, random_graph
from fullorient import kernels
from fullorient.kernels import _pure
from fullorient.oracle import dense_form
from fullorient.families import k32, kprime

try:
    from fullorient.kernels import _fast
except ImportError:
    _fast = None

needs_fast = pytest.mark.skipif(_fast is None, reason="compiled kernel not built")


def _cases(seed, count, max_n=8):
    rng = random.Random(seed)
    for _ in range(count):
        g = random_graph(rng, rng.randint(0, max_n))
        n, adj = dense_form(g)
        clique = 0
        verts = list(range(n))
        rng.shuffle(verts)
        for v in verts:
            if all(adj[v] >> w & 1 for w in range(n) if clique >> w & 1):
                clique |= 1 << v
                if rng.random() < 0.4:
                    break
        yield rng, g, n, adj, clique


def test_pure_histogram_matches_brute_force():
    for _, g, n, adj, _ in _cases(1, 40, 6):
        hist = _pure.histogram(n, adj)
        assert {d: c for d, c in enumerate(hist) if c} == brute_spectrum(g)


@needs_fast
def test_fast_and_pure_agree():
    for rng, g, n, adj, clique in _cases(2, 150, 7):
        assert _fast.histogram(n, adj) == _pure.histogram(n, adj)
        assert _fast.min_dependent(n, adj) == _pure.min_dependent(n, adj)
        lo = rng.randint(0, g.size)
        hi = rng.randint(lo, g.size)
        assert _fast.first_match(n, adj, clique, lo, hi) == _pure.first_match(n, adj, clique, lo, hi)
        assert _fast.first_match(n, adj, 0, lo, hi) == _pure.first_match(n, adj, 0, lo, hi)


@pytest.mark.parametrize("backend", ["pure", "fast"])
def test_partitions_merge_to_full_histogram(backend):
    mod = _pure if backend == "pure" else _fast
    if mod is None:
        pytest.skip("compiled kernel not built")
    for _, _, n, adj, _ in _cases(3, 30, 7):
        full = mod.histogram(n, adj)
        for nparts in (2, 3, 5):
            split = n // 2
            parts = [mod.histogram(n, adj, split, p, nparts) for p in range(nparts)]
            merged = [sum(col) for col in zip(*parts)]
            assert merged == full


def test_iterated_masks_match_histogram():
    for _, _, n, adj, _ in _cases(4, 30, 6):
        total = sum(1 for _ in _pure.iter_orientations(n, adj))
        assert total == sum(_pure.histogram(n, adj))


def test_first_match_returns_none_when_window_empty():
    n, adj = dense_form(k32())
    assert _pure.first_match(n, adj, 0, 5, 5) is None
    assert kernels.first_match(n, adj, 0, 5, 5) is None


def test_large_graphs_take_pure_path(monkeypatch):
    calls = []
    monkeypatch.setattr(_pure, "min_dependent", lambda n, adj: calls.append(n) or 0)
    kernels.min_dependent(65, [0] * 65)
    assert calls == [65]


def test_forced_pure_backend(monkeypatch):
    monkeypatch.setenv("FULLORIENT_PURE", "1")
    try:
        reloaded = importlib.reload(kernels)
        assert reloaded.BACKEND == "python"
        n, adj = dense_form(kprime())
        hist = reloaded.histogram(n, adj)
        assert [d for d, c in enumerate(hist) if c] == [6, 7, 8, 9]
    finally:
        monkeypatch.delenv("FULLORIENT_PURE")
        importlib.reload(kernels)
