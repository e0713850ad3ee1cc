"""Fixtures for the command-line tests."""

from typing import Generator

import pytest


@pytest.fixture
def p4_file(tmp_path) -> Generator[str, None, None]:
    """The path 3-1-2-4 as an edge-list file."""
    path = tmp_path / "p4.txt"
    path.write_text("4 3\n1 2\n1 3\n2 4\n", encoding="ascii")
    yield str(path)


@pytest.fixture
def claw_file(tmp_path) -> Generator[str, None, None]:
    """K1,3 with centre 1."""
    path = tmp_path / "claw.txt"
    path.write_text("4 3\n1 2\n1 3\n1 4\n", encoding="ascii")
    yield str(path)
