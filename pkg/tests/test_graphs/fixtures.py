"""Fixtures for the graphs tests."""

from typing import Generator

import pytest

from graphs import Graph


@pytest.fixture
def p4() -> Graph:
    """The path 3-1-2-4."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 4)])


@pytest.fixture
def edge_list_file(tmp_path) -> Generator[str, None, None]:
    """An edge-list file with a comment, a blank line and a duplicate edge."""
    path = tmp_path / "p4.g"
    path.write_text("# path\n4 4\n\n1 2\n1 3\n2 4\n2 1\n", encoding="ascii")
    yield str(path)
