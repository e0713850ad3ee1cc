"""Fixtures and witness replay for the certifier tests."""

import pytest

from certifiers import Certificate, Rule
from graphs import Graph, VertexOrdering
from hierarchy import LAYERED_G


@pytest.fixture
def p4() -> Graph:
    """The path 3-1-2-4."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])


@pytest.fixture
def layered_g() -> Graph:
    """The tree with edges 4-6, 1-4, 1-2, 1-3, 3-5."""
    return LAYERED_G


@pytest.fixture
def star() -> Graph:
    """K1,3 with centre 1."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


@pytest.fixture
def k4() -> Graph:
    """The complete graph on four vertices."""
    return Graph.from_edges(4, [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])


def _left_neighbours(graph: Graph, sigma: VertexOrdering, v: int, lo: int, hi: int):
    """Neighbours of v whose position lies in [lo, hi)."""
    return [w for w in graph.neighbours(v) if lo <= sigma.pos(w) < hi]


def replay_witness(
    graph: Graph, sigma: VertexOrdering, certificate: Certificate
) -> bool:
    """
    Check a rejection against the three-point condition it cites:
    a < b < c in sigma, ac an edge, ab not an edge, and no rescuing d.
    """
    a, b, c = certificate.witness.vertices
    pa, pb, pc = (sigma.pos(v) for v in (a, b, c))
    if certificate.witness.positions != [pa, pb, pc]:
        return False
    if not (pa < pb < pc and graph.has_edge(a, c) and not graph.has_edge(a, b)):
        return False
    rule = certificate.rule
    if rule == Rule.GEN_TRIPLE:
        return not _left_neighbours(graph, sigma, b, 1, pb)
    if rule == Rule.BFS_TRIPLE:
        return not _left_neighbours(graph, sigma, b, 1, pa)
    if rule == Rule.DFS_TRIPLE:
        return not _left_neighbours(graph, sigma, b, pa, pb)
    if rule == Rule.LBFS_PATTERN:
        rescuers = _left_neighbours(graph, sigma, b, 1, pa)
    elif rule == Rule.LDFS_PATTERN:
        rescuers = _left_neighbours(graph, sigma, b, pa + 1, pb)
    else:
        raise ValueError(f"no replay for {rule}")
    return all(graph.has_edge(d, c) for d in rescuers)
