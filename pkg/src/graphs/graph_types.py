"""Graph types shared by every package."""

from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

NO_NEIGHBOUR = -1


class GraphParseError(ValueError):
    """Raised when an edge-list document cannot be read."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class OrderingParseError(ValueError):
    """Raised when an ordering is not a permutation of 1..n."""

    def __init__(
        self,
        n: int,
        missing: List[int],
        duplicates: List[int],
        out_of_range: List[str],
    ) -> None:
        problems = []
        if duplicates:
            problems.append(f"duplicate {' '.join(map(str, duplicates))}")
        if missing:
            problems.append(f"missing {' '.join(map(str, missing))}")
        if out_of_range:
            problems.append(f"invalid {' '.join(out_of_range)}")
        super().__init__(f"not a permutation of 1..{n}: {', '.join(problems)}")
        self.missing = missing
        self.duplicates = duplicates
        self.out_of_range = out_of_range


@dataclass(frozen=True)
class Graph:
    """
    Simple graph on vertices 1..n.
    adjacency[v] lists the (out-)neighbours of v; adjacency[0] is unused.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    directed: bool = False

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Tuple[int, int]], directed: bool = False
    ) -> "Graph":
        """Build a graph, collapsing duplicate edges. Self-loops are rejected."""
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen: List[dict[int, None]] = [{} for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            seen[u][v] = None
            if not directed:
                seen[v][u] = None
        return cls(n, tuple(tuple(s) for s in seen), directed)

    @cached_property
    def m(self) -> int:
        """Number of edges (arcs when directed)."""
        total = sum(len(nbrs) for nbrs in self.adjacency)
        return total if self.directed else total // 2

    @cached_property
    def neighbour_sets(self) -> Tuple[FrozenSet[int], ...]:
        """Adjacency as sets, for membership tests."""
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def predecessors(self) -> Tuple[Tuple[int, ...], ...]:
        """In-neighbours of each vertex; equals adjacency when undirected."""
        if not self.directed:
            return self.adjacency
        preds: List[List[int]] = [[] for _ in range(self.n + 1)]
        for u in self.vertices():
            for v in self.adjacency[u]:
                preds[v].append(u)
        return tuple(tuple(p) for p in preds)

    def vertices(self) -> range:
        """The vertex set 1..n."""
        return range(1, self.n + 1)

    def neighbours(self, v: int) -> Tuple[int, ...]:
        """The (out-)neighbours of v."""
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        """True if v is a neighbour of u."""
        return v in self.neighbour_sets[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Each edge once (u < v when undirected), in adjacency order."""
        for u in self.vertices():
            for v in self.adjacency[u]:
                if self.directed or u < v:
                    yield u, v


@dataclass(frozen=True)
class VertexOrdering:
    """
    A permutation sigma of 1..n.
    order[i - 1] is sigma(i); position[v] is the 1-based index of v.
    """

    order: Tuple[int, ...]
    position: Tuple[int, ...]

    @classmethod
    def from_sequence(cls, vertices: Sequence[int]) -> "VertexOrdering":
        """Validate and wrap a sequence of vertices."""
        n = len(vertices)
        position = [0] * (n + 1)
        duplicates: List[int] = []
        invalid: List[str] = []
        for index, v in enumerate(vertices, start=1):
            if not 1 <= v <= n:
                invalid.append(str(v))
            elif position[v]:
                duplicates.append(v)
            else:
                position[v] = index
        missing = [v for v in range(1, n + 1) if not position[v]]
        if missing or duplicates or invalid:
            raise OrderingParseError(n, missing, duplicates, invalid)
        return cls(tuple(vertices), tuple(position))

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        """The ordering 1, 2, ..., n."""
        return cls(tuple(range(1, n + 1)), tuple(range(n + 1)))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def at(self, i: int) -> int:
        """sigma(i), 1-based."""
        return self.order[i - 1]

    def pos(self, v: int) -> int:
        """sigma^-1(v), 1-based."""
        return self.position[v]

    def before(self, u: int, v: int) -> bool:
        """u <_sigma v."""
        return self.position[u] < self.position[v]


@dataclass(frozen=True)
class PrefixNeighborTables:
    """
    Per-vertex neighbour positions relative to an ordering.
    ln: leftmost left neighbour, lmax: rightmost left neighbour,
    rn: rightmost right neighbour. All are positions or NO_NEIGHBOUR.
    """

    ordering: VertexOrdering
    ln: Tuple[int, ...]
    rn: Tuple[int, ...]
    lmax: Tuple[int, ...]

    def left(self, x: int) -> Tuple[int, int]:
        """Left(x) = [ln(x), x] as positions."""
        p = self.ordering.pos(x)
        return (p if self.ln[x] == NO_NEIGHBOUR else self.ln[x], p)

    def right(self, x: int) -> Tuple[int, int]:
        """Right(x) = [x, rn(x)] as positions."""
        p = self.ordering.pos(x)
        return (p, p if self.rn[x] == NO_NEIGHBOUR else self.rn[x])

    def rleft(self, x: int) -> Tuple[int, int]:
        """RLeft(x) = [lmax(x), x] as positions."""
        p = self.ordering.pos(x)
        return (p if self.lmax[x] == NO_NEIGHBOUR else self.lmax[x], p)
