"""Reading and writing the edge-list and ordering text formats."""

from pathlib import Path
from typing import Dict, List, Tuple, Union

from .graph_types import Graph, GraphParseError, OrderingParseError, VertexOrdering

DIRECTED_TOKEN = "directed"


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """Non-blank, non-comment lines with their 1-based line numbers."""
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            lines.append((number, stripped))
    return lines


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise GraphParseError(line, f"expected an integer, got {token!r}") from e


def parse_graph(text: str) -> Graph:
    """
    Parse an edge-list document.
    The header is "n m" with an optional "directed" token, followed by m lines "u v".
    Duplicate edges are collapsed.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError(1, "missing header line 'n m'")
    header_line, header = lines[0]
    tokens = header.split()
    directed = DIRECTED_TOKEN in tokens
    tokens = [t for t in tokens if t != DIRECTED_TOKEN]
    if len(tokens) != 2:
        raise GraphParseError(header_line, f"malformed header {header!r}")
    n, m = (_parse_int(t, header_line) for t in tokens)
    if n < 0 or m < 0:
        raise GraphParseError(header_line, "n and m must be non-negative")
    body = lines[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else (lines[-1][0] + 1)
        raise GraphParseError(line, f"expected {m} edge lines, found {len(body)}")
    arcs: Dict[Tuple[int, int], None] = {}
    for number, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise GraphParseError(number, f"malformed edge line {line!r}")
        u, v = (_parse_int(f, number) for f in fields)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(number, f"vertex out of range 1..{n} in {line!r}")
        if u == v:
            raise GraphParseError(number, f"self-loop on vertex {u}")
        arcs[(u, v)] = None
    return Graph.from_edges(n, arcs, directed=directed)


def parse_ordering(text: str, n: int) -> VertexOrdering:
    """Parse a whitespace-separated permutation of 1..n."""
    values: List[int] = []
    invalid: List[str] = []
    for token in text.split():
        try:
            values.append(int(token))
        except ValueError:
            invalid.append(token)
    if invalid:
        present = {v for v in values if 1 <= v <= n}
        missing = [v for v in range(1, n + 1) if v not in present]
        raise OrderingParseError(n, missing, [], invalid)
    if len(values) != n:
        counts: Dict[int, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        raise OrderingParseError(
            n,
            [v for v in range(1, n + 1) if v not in counts],
            sorted(v for v, c in counts.items() if c > 1),
            [str(v) for v in values if not 1 <= v <= n],
        )
    return VertexOrdering.from_sequence(values)


def read_graph(path: Union[str, Path]) -> Graph:
    """Read an edge-list file."""
    with open(path, "r", encoding="ascii") as file:
        return parse_graph(file.read())


def read_ordering(path: Union[str, Path], n: int) -> VertexOrdering:
    """Read an ordering file."""
    with open(path, "r", encoding="ascii") as file:
        return parse_ordering(file.read(), n)


def graph_to_text(graph: Graph) -> str:
    """Serialize a graph in the edge-list format parse_graph reads."""
    edges = list(graph.edges())
    header = f"{graph.n} {len(edges)}"
    if graph.directed:
        header += f" {DIRECTED_TOKEN}"
    return "\n".join([header] + [f"{u} {v}" for u, v in edges]) + "\n"


def ordering_to_text(ordering: VertexOrdering) -> str:
    """Space-separated vertices."""
    return " ".join(map(str, ordering))
