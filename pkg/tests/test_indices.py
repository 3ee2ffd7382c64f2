import pytest
from hypothesis import given

from conftest import graphs
from transgraph.errors import IndexOverflowError
from transgraph.graph import Graph, complement
from transgraph.indices import IndexBundle, _checked, first_zagreb, forgotten, index_bundle, second_zagreb


def test_sample_graph_indices(fig2):
    # degrees 2, 3, 1, 1, 1
    assert first_zagreb(fig2) == 4 + 9 + 1 + 1 + 1
    assert second_zagreb(fig2) == 2 * 3 + 2 * 1 + 3 * 1 + 3 * 1
    assert forgotten(fig2) == 8 + 27 + 1 + 1 + 1
    assert index_bundle(fig2) == IndexBundle(5, 4, 16, 14, 38)


def test_small_graphs(p2, k3):
    assert (first_zagreb(p2), second_zagreb(p2), forgotten(p2)) == (2, 1, 2)
    assert (first_zagreb(k3), forgotten(k3)) == (12, 24)
    assert index_bundle(k3) == IndexBundle(3, 3, 12, 12, 24)
    assert index_bundle(Graph(3)) == IndexBundle(3, 0, 0, 0, 0)
    assert second_zagreb(Graph(0)) == 0


def test_overflow_is_an_error():
    assert _checked(2**63 - 1, "M1") == 2**63 - 1
    with pytest.raises(IndexOverflowError):
        _checked(2**63, "M1")


@given(graphs())
def test_edge_sum_identities(g):
    d = g.degrees
    assert sum(d[a] + d[b] for a, b in g.edges) == first_zagreb(g)
    assert sum((d[a] + d[b]) ** 2 for a, b in g.edges) == forgotten(g) + 2 * second_zagreb(g)


@given(graphs())
def test_complement_first_zagreb(g):
    n, m = g.n, g.m
    assert first_zagreb(complement(g)) == n * (n - 1) ** 2 - 4 * m * (n - 1) + first_zagreb(g)


@given(graphs())
def test_bundle_bounds(g):
    b = index_bundle(g)
    assert b.m1 <= b.n * (b.n - 1) ** 2
    assert b.f <= b.n * (b.n - 1) ** 3
    assert (b.m1, b.m2, b.f) == (first_zagreb(g), second_zagreb(g), forgotten(g))
