import random

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import random_graph
from fullorient.families import complete_graph, cycle_graph, empty_graph, k32, kprime, k4_minus_edge, path_graph
from fullorient.graph import (
    Graph,
    GraphError,
    ParseError,
    add_simplicial_vertex,
    components,
    induced_subgraph,
    is_clique,
    parse_edge_list,
    render_edge_list,
)


def test_parse_path():
    g = parse_edge_list("0 1\n1 2")
    assert g == path_graph(3)
    assert (g.order, g.size) == (3, 2)


def test_parse_duplicate_edges_collapse():
    assert parse_edge_list("0 1\n0 1").size == 1
    assert parse_edge_list("0 1\n1 0").size == 1


def test_parse_k32_twelve_lines():
    text = "".join(f"{u} {v}\n" for u, v in sorted(k32().edges))
    assert len(text.splitlines()) == 12
    g = parse_edge_list(text)
    assert (g.order, g.size) == (6, 12)
    assert g == k32()


def test_parse_header_comments_and_normalization():
    g, mapping = parse_edge_list("# demo\nn 3\n\n10 20\n", with_mapping=True)
    # header declares 0,1,2; edge mentions 10,20; ids keep numeric order
    assert mapping == {0: 0, 1: 1, 2: 2, 10: 3, 20: 4}
    assert g.vertices == (0, 1, 2, 3, 4)
    assert g.edges == {(3, 4)}


@pytest.mark.parametrize(
    "text, line",
    [("0 1\n1 x", 2), ("0 1 2", 1), ("-1 2", 1), ("n", 1), ("# c\n\n0", 3)],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_edge_list(text)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


def test_parse_rejects_self_loop():
    with pytest.raises(ParseError, match="self-loop"):
        parse_edge_list("0 1\n2 2\n")


def test_graph_rejects_self_loop_and_negative():
    with pytest.raises(GraphError):
        Graph([0], [(0, 0)])
    with pytest.raises(GraphError):
        Graph([-1])


@pytest.mark.parametrize("g, count", [(complete_graph(3), 1), (Graph(range(4), [(0, 1), (2, 3)]), 2), (empty_graph(3), 3)])
def test_components(g, count):
    assert components(g)[0] == count


def test_component_labels_follow_smallest_vertex():
    c, labels = components(Graph(range(5), [(3, 4), (0, 2)]))
    assert c == 3
    assert labels == {0: 0, 2: 0, 1: 1, 3: 2, 4: 2}


def test_is_clique_examples():
    assert is_clique(complete_graph(4), [0, 2, 3])
    assert not is_clique(cycle_graph(4), [0, 1, 2])
    # one vertex from each part of K_{3(2)}
    assert is_clique(k32(), [0, 2, 4])
    assert not is_clique(k32(), [0, 1])
    with pytest.raises(GraphError):
        is_clique(complete_graph(3), [0, 7])


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), [0, 1, 2]) == complete_graph(3)
    assert induced_subgraph(cycle_graph(5), [1, 2]) == Graph([1, 2], [(1, 2)])
    two = induced_subgraph(k32(), [0, 1])
    assert two.order == 2 and two.size == 0
    with pytest.raises(GraphError):
        induced_subgraph(k32(), [9])


def test_add_simplicial_vertex_examples():
    assert add_simplicial_vertex(complete_graph(3), [0, 1, 2]) == complete_graph(4)
    assert add_simplicial_vertex(complete_graph(3), [0, 1]) == Graph(range(4), [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
    assert add_simplicial_vertex(complete_graph(3), [0, 1]).relabel({0: 0, 1: 1, 2: 3, 3: 2}) == k4_minus_edge()
    kp = add_simplicial_vertex(k32(), [0, 3, 5])
    assert (kp.order, kp.size) == (7, 15)
    assert kp == kprime()


def test_add_simplicial_vertex_requires_clique():
    with pytest.raises(GraphError, match="not a clique"):
        add_simplicial_vertex(k32(), [0, 1])
    with pytest.raises(GraphError):
        add_simplicial_vertex(complete_graph(3), [0], vertex=1)


def test_add_isolated_vertex():
    g = add_simplicial_vertex(complete_graph(2), [])
    assert g.order == 3 and components(g)[0] == 2


@given(graphs(), st.randoms(use_true_random=False))
def test_simplicial_addition_counts(g, rnd):
    start = rnd.choice(g.vertices)
    clique = [start]
    for v in sorted(g.neighbors(start)):
        if rnd.random() < 0.5 and all(g.has_edge(v, w) for w in clique):
            clique.append(v)
    g2 = add_simplicial_vertex(g, clique)
    new = g2.vertices[-1]
    assert g2.size == g.size + len(clique)
    assert g2.order == g.order + 1
    assert g2.neighbors(new) == frozenset(clique)


@given(graphs())
def test_induced_on_everything_is_identity(g):
    assert induced_subgraph(g, g.vertices) == g


@given(graphs(), st.randoms(use_true_random=False))
def test_components_invariant_under_relabel(g, rnd):
    ids = rnd.sample(range(100), g.order)
    h = g.relabel(dict(zip(g.vertices, ids)))
    assert components(h)[0] == components(g)[0]


@given(graphs(min_n=0))
def test_render_parse_round_trip(g):
    text = render_edge_list(g)
    h = parse_edge_list(text)
    assert h == g
    assert render_edge_list(h) == text


def test_adjacency_is_symmetric_closure():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 8))
        for u in g.vertices:
            for v in g.neighbors(u):
                assert u in g.neighbors(v)
                assert (min(u, v), max(u, v)) in g.edges
        assert sum(map(g.degree, g.vertices)) == 2 * g.size
