"""The expected Hasse diagram of the built-in orders and the layered fixtures."""

from typing import Tuple

from graphs import Graph

EXPECTED_HASSE: Tuple[Tuple[str, str], ...] = (
    ("gen", "bfs"),
    ("gen", "dfs"),
    ("gen", "mns"),
    ("mns", "lbfs"),
    ("mns", "ldfs"),
    ("mns", "mcs"),
    ("bfs", "lbfs"),
    ("dfs", "ldfs"),
)

# Both graphs give x5 the label {3} and x6 the label {4} after the prefix 1 2 3 4
LAYERED_G = Graph.from_edges(6, [(4, 6), (1, 4), (1, 2), (1, 3), (3, 5)])
LAYERED_H = Graph.from_edges(6, [(1, 2), (2, 4), (4, 6), (1, 3), (3, 5)])

LAYERED_PREFIX = (1, 2, 3, 4)
FORWARD_COMPLETION = (5, 6)
REVERSED_COMPLETION = (6, 5)
