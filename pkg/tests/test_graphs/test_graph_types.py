"""
This file contains the tests for the graphs/graph_types.py file.
"""

# pylint: disable=redefined-outer-name unused-argument unused-import

import pytest

from graphs import Graph, OrderingParseError, VertexOrdering

from .fixtures import p4


def test_from_edges(p4: Graph) -> None:
    """Edges are stored in both directions and counted once."""
    assert p4.n == 4
    assert p4.m == 3
    assert p4.has_edge(2, 1)
    assert not p4.has_edge(3, 4)
    assert list(p4.edges()) == [(1, 2), (1, 3), (2, 4)]


def test_from_edges_collapses_duplicates() -> None:
    """A repeated edge in either direction is kept once."""
    graph = Graph.from_edges(2, [(1, 2), (2, 1), (1, 2)])
    assert graph.m == 1
    assert graph.neighbours(1) == (2,)


def test_from_edges_rejects_bad_input() -> None:
    """Self-loops and out-of-range vertices are errors."""
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 3)])


def test_directed_predecessors() -> None:
    """Predecessors are the in-neighbours of a directed graph."""
    graph = Graph.from_edges(3, [(1, 2), (3, 2)], directed=True)
    assert graph.m == 2
    assert graph.neighbours(2) == ()
    assert graph.predecessors[2] == (1, 3)


def test_vertex_ordering() -> None:
    """Positions are 1-based and inverse to at()."""
    sigma = VertexOrdering.from_sequence([3, 1, 2])
    assert sigma.at(1) == 3
    assert sigma.pos(3) == 1
    assert sigma.before(1, 2)
    assert not sigma.before(2, 3)
    assert list(sigma) == [3, 1, 2]
    assert VertexOrdering.identity(3) == VertexOrdering.from_sequence([1, 2, 3])


def test_vertex_ordering_rejects_non_permutation() -> None:
    """Duplicates and missing vertices are both reported."""
    with pytest.raises(OrderingParseError) as error:
        VertexOrdering.from_sequence([1, 1, 2])
    assert error.value.duplicates == [1]
    assert error.value.missing == [3]
    assert "duplicate 1" in str(error.value)


def test_empty_ordering() -> None:
    """n = 0 is a valid, empty permutation."""
    sigma = VertexOrdering.identity(0)
    assert len(sigma) == 0
    assert not list(sigma)
