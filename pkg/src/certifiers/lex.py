"""
LBFS and LDFS recognition through the pairwise pattern table.
For each pair b < c the decisive vertex is the leftmost (LBFS) or rightmost
(LDFS) vertex of N(b) ^ N(c) placed before b; the pattern holds iff that
vertex is a neighbour of b. O(n(n + m)) time.
"""

from bisect import bisect_left
from typing import Iterator, List, Literal, Optional, Tuple

from graphs import Graph, VertexOrdering

from .cert_types import (
    ERROR_MARK,
    VACUOUS,
    Certificate,
    PatternTable,
    Rule,
    require_undirected,
)

LexSearch = Literal["lbfs", "ldfs"]
LEX_RULES = {"lbfs": Rule.LBFS_PATTERN, "ldfs": Rule.LDFS_PATTERN}

# (position of the decisive vertex, whether it belongs to N(b))
Decisive = Optional[Tuple[int, bool]]


def neighbour_positions(graph: Graph, sigma: VertexOrdering) -> List[List[int]]:
    """Sorted neighbour positions of every vertex."""
    table: List[List[int]] = [[] for _ in range(graph.n + 1)]
    for v in graph.vertices():
        table[v] = sorted(sigma.pos(w) for w in graph.adjacency[v])
    return table


def _leftmost_difference(nb: List[int], nc: List[int], limit: int) -> Decisive:
    i, j = 0, 0
    end_b, end_c = bisect_left(nb, limit), bisect_left(nc, limit)
    while i < end_b or j < end_c:
        if j == end_c or (i < end_b and nb[i] < nc[j]):
            return nb[i], True
        if i == end_b or nc[j] < nb[i]:
            return nc[j], False
        i += 1
        j += 1
    return None


def _rightmost_difference(nb: List[int], nc: List[int], limit: int) -> Decisive:
    i, j = bisect_left(nb, limit) - 1, bisect_left(nc, limit) - 1
    while i >= 0 or j >= 0:
        if j < 0 or (i >= 0 and nb[i] > nc[j]):
            return nb[i], True
        if i < 0 or nc[j] > nb[i]:
            return nc[j], False
        i -= 1
        j -= 1
    return None


def _decisive(search: LexSearch, nb: List[int], nc: List[int], limit: int) -> Decisive:
    if search == "lbfs":
        return _leftmost_difference(nb, nc, limit)
    return _rightmost_difference(nb, nc, limit)


def _pairs(n: int) -> Iterator[Tuple[int, int]]:
    """Position pairs b < c by increasing c, then b."""
    for c in range(2, n + 1):
        for b in range(1, c):
            yield b, c


def build_pattern_table(
    graph: Graph, sigma: VertexOrdering, search: LexSearch
) -> PatternTable:
    """The full table: vertex a where the pattern holds, VACUOUS, or ERROR_MARK."""
    require_undirected(graph)
    positions = neighbour_positions(graph, sigma)
    table = PatternTable(graph.n)
    for b, c in _pairs(graph.n):
        found = _decisive(search, positions[sigma.at(b)], positions[sigma.at(c)], b)
        if found is None:
            table[b, c] = VACUOUS
        else:
            table[b, c] = sigma.at(found[0]) if found[1] else ERROR_MARK
    return table


def _reject(
    search: LexSearch,
    sigma: VertexOrdering,
    a_pos: int,
    b: int,
    c: int,
    **detail: object,
) -> Certificate:
    return Certificate.reject(
        LEX_RULES[search],
        sigma,
        [sigma.at(a_pos), sigma.at(b), sigma.at(c)],
        **detail,
    )


def check_lex(
    graph: Graph, sigma: VertexOrdering, search: LexSearch, full_table: bool = False
) -> Certificate:
    """
    Stream the pairs and stop at the first failing pattern, or with
    full_table build the whole table first and attach it to the certificate.
    """
    require_undirected(graph)
    positions = neighbour_positions(graph, sigma)
    if full_table:
        table = build_pattern_table(graph, sigma, search)
        rows = table.to_rows()
        errors = list(table.errors())
        if not errors:
            return Certificate.accept(table=rows)
        b, c = errors[0]
        found = _decisive(search, positions[sigma.at(b)], positions[sigma.at(c)], b)
        assert found is not None
        return _reject(search, sigma, found[0], b, c, errors=len(errors), table=rows)
    for b, c in _pairs(graph.n):
        found = _decisive(search, positions[sigma.at(b)], positions[sigma.at(c)], b)
        if found is not None and not found[1]:
            return _reject(search, sigma, found[0], b, c)
    return Certificate.accept()


def check_lbfs(
    graph: Graph, sigma: VertexOrdering, full_table: bool = False
) -> Certificate:
    """LBFS: the leftmost vertex of N(b) ^ N(c) before b must be in N(b)."""
    return check_lex(graph, sigma, "lbfs", full_table)


def check_ldfs(
    graph: Graph, sigma: VertexOrdering, full_table: bool = False
) -> Certificate:
    """LDFS: the rightmost vertex of N(b) ^ N(c) before b must be in N(b)."""
    return check_lex(graph, sigma, "ldfs", full_table)
