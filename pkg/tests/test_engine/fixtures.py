"""Fixtures for the engine tests."""

import pytest

from graphs import Graph
from hierarchy import LAYERED_H


@pytest.fixture
def p4() -> Graph:
    """The path 3-1-2-4."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])


@pytest.fixture
def layered_h() -> Graph:
    """Two paths 1-2-4-6 and 1-3-5 sharing vertex 1."""
    return LAYERED_H


@pytest.fixture
def edgeless() -> Graph:
    """Five isolated vertices."""
    return Graph.from_edges(5, [])
