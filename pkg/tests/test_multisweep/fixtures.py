"""Fixtures for the multisweep tests."""

from itertools import combinations

import pytest

from graphs import Graph, VertexOrdering


@pytest.fixture
def claw() -> Graph:
    """K1,3 with centre 1."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


@pytest.fixture
def c5() -> Graph:
    """The five-cycle."""
    return Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])


@pytest.fixture
def path4() -> Graph:
    """The path 1-2-3-4."""
    return Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])


def umbrellas(graph: Graph, sigma: VertexOrdering, strict: bool):
    """
    Triples x < y < z with xz in E and y missing both ends (strict=False)
    or at least one end (strict=True).
    """
    for p, q, r in combinations(range(1, graph.n + 1), 3):
        x, y, z = sigma.at(p), sigma.at(q), sigma.at(r)
        if not graph.has_edge(x, z):
            continue
        missing = [not graph.has_edge(x, y), not graph.has_edge(y, z)]
        if any(missing) if strict else all(missing):
            yield x, y, z
