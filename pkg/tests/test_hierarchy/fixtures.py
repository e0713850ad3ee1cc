"""Fixtures for the hierarchy tests."""

from typing import List

import pytest

from graphs import Graph
from hierarchy import small_graph_corpus


@pytest.fixture
def p4() -> Graph:
    """The path 3-1-2-4."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])


@pytest.fixture
def tiny_corpus() -> List[Graph]:
    """Every graph on up to four vertices."""
    return small_graph_corpus(4)
