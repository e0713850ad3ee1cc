"""Type definitions and settings for the engine package."""

import os
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, TypedDict

from graphs import Graph, VertexOrdering
from labels import EMPTY_LABEL, LabelSet

DEBUG = os.getenv("TBLS_DEBUG", "false").lower() == "true"

ENGINES = ("ref", "fast", "auto")


class TotalityViolation(ValueError):
    """Two distinct live labels were incomparable under a non-total order."""

    def __init__(self, a: LabelSet, b: LabelSet) -> None:
        super().__init__(
            f"labels {set(a) or '{}'} and {set(b) or '{}'} are incomparable"
        )
        self.a = a
        self.b = b


class TraceStep(TypedDict):
    """One step of a reference run, for --trace output."""

    step: int
    eligible: List[int]
    labels: Dict[int, List[int]]
    chosen: int


TraceHook = Callable[[TraceStep], None]


@dataclass
class EngineState:
    """
    Labels of the unnumbered vertices and dates of the numbered ones.
    At step i exactly i - 1 vertices are numbered.
    """

    labels: Dict[int, LabelSet]
    numbered: Dict[int, int] = field(default_factory=dict)
    step: int = 1

    @classmethod
    def initial(cls, graph: Graph) -> "EngineState":
        """Every vertex unnumbered with an empty label."""
        return cls({v: EMPTY_LABEL for v in graph.vertices()})

    def visit(self, graph: Graph, v: int) -> None:
        """Number v with the current step and stamp its unnumbered neighbours."""
        date = self.step
        del self.labels[v]
        self.numbered[v] = date
        for w in graph.neighbours(v):
            if w in self.labels:
                self.labels[w] = self.labels[w] + (date,)
        self.step += 1


@dataclass(frozen=True)
class SearchResult:
    """Output ordering and the engine that produced it."""

    ordering: VertexOrdering
    engine: str
    fallback_reason: Optional[str] = None
