"""Certificate and pattern-table types."""

from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from graphs import Graph, VertexOrdering

ERROR_MARK = -1
VACUOUS = 0


class Rule(str, Enum):
    """The condition a rejected ordering violates."""

    PAIRWISE = "tbls.pairwise"
    FIXPOINT = "tbls.fixpoint"
    GEN_TRIPLE = "gen.triple"
    BFS_TRIPLE = "bfs.triple"
    DFS_TRIPLE = "dfs.triple"
    LBFS_PATTERN = "lbfs.pattern"
    LDFS_PATTERN = "ldfs.pattern"
    UNIT_INTERVAL = "unit-interval.triple"
    COCOMP = "cocomp.umbrella"


class UnsupportedGraphError(ValueError):
    """Raised when a certifier is given a directed graph."""


class PreconditionError(ValueError):
    """Raised when a certifier is handed a failed GEN pre-check."""


class Witness(BaseModel):
    """Witness vertices and their 1-based positions in the ordering."""

    vertices: List[int] = Field(default_factory=list)
    positions: List[int] = Field(default_factory=list)


class Certificate(BaseModel):
    """Accept, or reject with the violated rule and a re-checkable witness."""

    accepted: bool
    rule: Optional[Rule] = None
    witness: Witness = Field(default_factory=Witness)
    detail: Dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def accept(cls, **detail: Any) -> "Certificate":
        """An accepting certificate."""
        return cls(accepted=True, detail=detail)

    @classmethod
    def reject(
        cls,
        rule: Rule,
        ordering: VertexOrdering,
        vertices: Sequence[int],
        **detail: Any,
    ) -> "Certificate":
        """A rejecting certificate; positions are looked up in ordering."""
        return cls(
            accepted=False,
            rule=rule,
            witness=Witness(
                vertices=list(vertices),
                positions=[ordering.pos(v) for v in vertices],
            ),
            detail=detail,
        )

    def to_json(self) -> str:
        """JSON form; the rule is omitted on accept."""
        return self.model_dump_json(exclude_none=True)


def require_undirected(graph: Graph) -> None:
    """Certifiers are only sound for undirected graphs."""
    if graph.directed:
        raise UnsupportedGraphError("certifiers require an undirected graph")


class PatternTable:
    """
    Dense triangular table keyed by position pairs b < c.
    A cell holds the witness vertex a, VACUOUS when no a exists,
    or ERROR_MARK when the pattern fails.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.cells = np.zeros(n * (n - 1) // 2, dtype=np.int64)

    @staticmethod
    def _index(b: int, c: int) -> int:
        return (c - 1) * (c - 2) // 2 + (b - 1)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        b, c = key
        if not 1 <= b < c <= self.n:
            raise KeyError(key)
        return int(self.cells[self._index(b, c)])

    def __setitem__(self, key: Tuple[int, int], value: int) -> None:
        b, c = key
        if not 1 <= b < c <= self.n:
            raise KeyError(key)
        self.cells[self._index(b, c)] = value

    def row(self, c: int) -> np.ndarray:
        """Cells (1, c) .. (c - 1, c) as a view."""
        start = self._index(1, c)
        return self.cells[start : start + c - 1]

    def errors(self) -> Iterator[Tuple[int, int]]:
        """Position pairs holding an error mark, by increasing c then b."""
        for c in range(2, self.n + 1):
            for b in np.flatnonzero(self.row(c) == ERROR_MARK):
                yield int(b) + 1, c

    def to_rows(self) -> List[List[int]]:
        """Every cell as [b, c, value]."""
        return [
            [b, c, int(value)]
            for c in range(2, self.n + 1)
            for b, value in enumerate(self.row(c), start=1)
        ]
