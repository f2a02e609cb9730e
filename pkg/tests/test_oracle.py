import random

import pytest
from hypothesis import given, settings

import fullorient.oracle as oracle
from conftest import graphs
from oracles import all_acyclic_orientations, brute_spectrum, random_clique, random_graph
from fullorient.chromatic import chromatic_polynomial_eval
from fullorient.families import KPRIME_TRIANGLE, complete_graph, cycle_graph, k32, k4_minus_edge, kprime, path_graph
from fullorient.graph import Graph, GraphError, add_simplicial_vertex
from fullorient.orientation import d_max, dependent_arcs, is_acyclic
from fullorient.oracle import (
    CapExceededError,
    ConsistencyError,
    SpectrumResult,
    count_acyclic_orientations,
    d_min_exact,
    dependency_spectrum,
    direction_vector,
    enumerate_acyclic_orientations,
    find_orientation,
    min_orientation_with_nontrivial_arc,
)
from fullorient.synthesis import nontrivial_dependent_arc

TREE = Graph(range(6), [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])


@pytest.mark.parametrize("g, count", [(complete_graph(3), 6), (path_graph(3), 4), (cycle_graph(4), 14)])
def test_enumeration_counts(g, count):
    found = list(enumerate_acyclic_orientations(g))
    assert len(found) == count
    assert len(set(found)) == count
    assert all(is_acyclic(d) for d in found)


def test_enumeration_is_lexicographic_in_direction_vectors():
    for g in (cycle_graph(4), k4_minus_edge(), TREE):
        vectors = [direction_vector(d) for d in enumerate_acyclic_orientations(g)]
        assert vectors == sorted(vectors)


@given(graphs(max_n=6))
@settings(max_examples=60)
def test_enumeration_matches_brute_force(g):
    assert {d.arcs for d in enumerate_acyclic_orientations(g)} == set(all_acyclic_orientations(g))


def test_cap_guard_names_cap():
    with pytest.raises(CapExceededError, match="24"):
        enumerate_acyclic_orientations(complete_graph(8))
    with pytest.raises(CapExceededError):
        dependency_spectrum(complete_graph(8))
    with pytest.raises(CapExceededError):
        d_min_exact(k32(), cap=11)
    assert dependency_spectrum(k32(), cap=12).keys == [4, 6, 7]


def test_spectrum_k32():
    s = dependency_spectrum(k32())
    assert s.keys == [4, 6, 7]
    assert not s.fully_orientable
    assert s.gaps() == [5]


def test_spectrum_kprime():
    s = dependency_spectrum(kprime())
    assert s.keys == [6, 7, 8, 9]
    assert (s.d_min, s.d_max_observed) == (6, 9)
    assert s.fully_orientable


def test_spectrum_k4_minus_edge():
    assert dependency_spectrum(k4_minus_edge()).keys == [1, 2]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_complete_graph_spectra_are_singletons(n):
    s = dependency_spectrum(complete_graph(n))
    expected = (n - 1) * (n - 2) // 2
    assert s.keys == [expected]
    assert d_min_exact(complete_graph(n)) == expected


def test_d_min_examples():
    assert d_min_exact(TREE) == 0
    assert d_min_exact(k32()) == 4
    assert d_min_exact(Graph([0])) == 0


def test_spectrum_result_serialization():
    s = SpectrumResult.from_counts([0, 3, 0, 1])
    assert (s.d_min, s.d_max_observed, s.total_acyclic) == (1, 3, 4)
    assert not s.fully_orientable
    d = s.as_dict()
    assert list(d) == ["d_min", "d_max", "histogram", "fully_orientable", "total_acyclic"]
    assert d["histogram"] == {"1": 3, "3": 1}


def test_spectrum_parallel_matches_sequential():
    for g in (k32(), kprime(), complete_graph(5)):
        assert dependency_spectrum(g, jobs=3) == dependency_spectrum(g)


@given(graphs(max_n=6))
@settings(max_examples=60)
def test_spectrum_matches_brute_force(g):
    s = dependency_spectrum(g)
    assert s.histogram == brute_spectrum(g)
    assert s.d_max_observed == d_max(g)


@pytest.mark.parametrize("g, count", [(complete_graph(3), 6), (cycle_graph(4), 14), (complete_graph(4), 24)])
def test_count_acyclic_orientations(g, count):
    assert count_acyclic_orientations(g) == count


def test_chromatic_polynomial_of_c4():
    for k in range(-3, 6):
        assert chromatic_polynomial_eval(cycle_graph(4), k) == (k - 1) ** 4 + (k - 1)


def test_count_raises_on_mismatch(monkeypatch):
    monkeypatch.setattr(oracle, "chromatic_polynomial_eval", lambda g, x: 13)
    with pytest.raises(ConsistencyError):
        count_acyclic_orientations(cycle_graph(4))
    assert count_acyclic_orientations(cycle_graph(4), check=False) == 14


def test_strict_nontrivial_search_on_k32_triangle():
    assert min_orientation_with_nontrivial_arc(k32(), KPRIME_TRIANGLE) is None


def test_relaxed_nontrivial_search_on_k32_triangle():
    d = min_orientation_with_nontrivial_arc(k32(), KPRIME_TRIANGLE, bound=6)
    assert d is not None
    assert dependent_arcs(d).count <= 6
    assert nontrivial_dependent_arc(d, KPRIME_TRIANGLE) is not None
    exact = find_orientation(k32(), 6, 6, KPRIME_TRIANGLE)
    assert dependent_arcs(exact).count == 6
    inside = [a for a in dependent_arcs(exact).dependent if set(a) <= KPRIME_TRIANGLE]
    assert len(inside) == 2


def test_nontrivial_search_on_whole_triangle():
    assert min_orientation_with_nontrivial_arc(complete_graph(3), [0, 1, 2]) is None


def test_nontrivial_search_requires_clique():
    with pytest.raises(GraphError):
        min_orientation_with_nontrivial_arc(k32(), [0, 1])


def test_find_orientation_respects_window():
    assert find_orientation(k32(), 5, 5) is None
    d = find_orientation(k32(), 6, 7)
    assert dependent_arcs(d).count in (6, 7)


def test_strict_search_agrees_with_exhaustive_filter():
    rng = random.Random(4)
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 6))
        q = random_clique(rng, g, 2)
        if q is None:
            continue
        dmin = d_min_exact(g)
        exists = any(
            dependent_arcs(d).count == dmin and nontrivial_dependent_arc(d, q) is not None
            for d in enumerate_acyclic_orientations(g)
        )
        found = min_orientation_with_nontrivial_arc(g, q)
        assert (found is not None) == exists
        if found is not None:
            assert dependent_arcs(found).count == dmin
            assert nontrivial_dependent_arc(found, q) is not None


def test_simplicial_extension_shifts_d_min_by_q_minus_2_or_1():
    rng = random.Random(6)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 6))
        q = random_clique(rng, g)
        shift = d_min_exact(add_simplicial_vertex(g, q)) - d_min_exact(g)
        assert shift in (len(q) - 2, len(q) - 1)
