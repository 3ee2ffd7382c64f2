import warnings

import pytest
from hypothesis import given

from conftest import graphs
from transgraph.errors import DuplicateEdgeWarning, GenerationError, ParseError, ValidationError
from transgraph.graph import (
    Graph,
    all_graphs,
    canonical_edges,
    complement,
    degree,
    format_edge_list,
    is_connected,
    parse_edge_list,
    random_graph,
)


def test_parse_sample_graph():
    g = parse_edge_list("5 4\n1 2\n1 4\n2 3\n2 5")
    assert g.n == 5
    assert g.edges == {(1, 2), (1, 4), (2, 3), (2, 5)}


def test_parse_single_vertex():
    g = parse_edge_list("1 0")
    assert (g.n, g.m) == (1, 0)


def test_parse_triangle_with_comments():
    g = parse_edge_list("# triangle\n3 3\n1 2\n\n2 3\n# closing edge\n1 3\n")
    assert g == Graph(3, [(1, 2), (2, 3), (3, 1)])


def test_parse_duplicates_collapse_with_warning():
    with pytest.warns(DuplicateEdgeWarning):
        g = parse_edge_list("3 3\n1 2\n2 1\n2 3")
    assert g.edges == {(1, 2), (2, 3)}


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n1 x", 2),
        ("3 1\n1 2 3", 2),
        ("three 1\n1 2", 1),
    ],
)
def test_parse_malformed_reports_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n1 2")


def test_parse_missing_header():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")


@pytest.mark.parametrize("text", ["3 1\n1 4", "3 1\n0 1", "3 1\n2 2"])
def test_parse_rejects_bad_endpoints_and_loops(text):
    with pytest.raises(ValidationError):
        parse_edge_list(text)


def test_graph_rejects_loops_and_range():
    with pytest.raises(ValidationError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValidationError):
        Graph(2, [(1, 3)])


def test_degree(fig2, k3):
    assert degree(fig2, 2) == 3
    assert all(degree(k3, v) == 2 for v in k3.vertices)
    assert degree(Graph(1), 1) == 0
    with pytest.raises(ValidationError):
        degree(fig2, 6)


def test_complement(fig2, k3):
    assert complement(k3) == Graph(3)
    assert complement(complement(fig2)) == fig2
    assert complement(fig2).m == 10 - 4


def test_canonical_edges(fig2, k3):
    assert list(canonical_edges(fig2)) == [(1, 2), (1, 4), (2, 3), (2, 5)]
    assert list(canonical_edges(Graph(4))) == []
    assert list(canonical_edges(k3)) == [(1, 2), (1, 3), (2, 3)]


def test_random_graph_extremes():
    assert random_graph(4, 1, seed=7) == Graph(4, [(a, b) for a in range(1, 5) for b in range(a + 1, 5)])
    assert random_graph(3, 0, seed=7, require_connected=False) == Graph(3)


def test_random_graph_deterministic():
    a = random_graph(8, 0.4, seed=123)
    b = random_graph(8, 0.4, seed=123)
    assert a == b
    assert is_connected(a)


def test_random_graph_unreachable_connectivity():
    with pytest.raises(GenerationError):
        random_graph(3, 0, seed=1, require_connected=True, max_tries=5)


def test_random_graph_rejects_bad_args():
    with pytest.raises(ValidationError):
        random_graph(0, 0.5, seed=1)
    with pytest.raises(ValidationError):
        random_graph(3, 1.5, seed=1)


def test_all_graphs_counts_and_order():
    listed = list(all_graphs(4))
    assert len(listed) == 2**6
    assert [g.m for g in listed] == sorted(g.m for g in listed)
    assert len(set(listed)) == len(listed)


@given(graphs())
def test_handshake(g):
    assert sum(degree(g, v) for v in g.vertices) == 2 * g.m


@given(graphs())
def test_complement_involution_and_degrees(g):
    c = complement(g)
    assert complement(c) == g
    for v in g.vertices:
        assert degree(c, v) == g.n - 1 - degree(g, v)


@given(graphs())
def test_serialize_round_trip(g):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert parse_edge_list(format_edge_list(g, comments=["round trip"])) == g
