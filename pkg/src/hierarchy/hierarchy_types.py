"""Type definitions for the hierarchy package."""

from typing import Dict, List, Optional, Tuple, TypedDict

from labels import LabelSet

# Exhaustive label universes beyond this are too slow to be useful
MAX_LABEL_UNIVERSE = 10
DEFAULT_LABEL_UNIVERSE = 5
# verify_hierarchy runs 42 exhaustive pair checks
MAX_HIERARCHY_UNIVERSE = 6

ExtensionWitness = Optional[Tuple[LabelSet, LabelSet]]


class ConstructionError(ValueError):
    """Raised when the witness-graph construction does not apply."""


class Separation(TypedDict):
    """An ordering of the target search that the source search rejects."""

    n: int
    edges: List[List[int]]
    ordering: List[int]
    source_rejects: bool


class NonArc(TypedDict):
    """A pair (source, target) where target does not extend source."""

    source: str
    target: str
    a: List[int]
    b: List[int]
    separation: Separation


class OrderingCheck(TypedDict):
    """A target-search ordering the source certifier did not accept."""

    source: str
    target: str
    edges: List[List[int]]
    ordering: List[int]


class HierarchyReport(TypedDict):
    """Extension relation among the built-in orders."""

    max_label: int
    orders: List[str]
    arcs: List[Tuple[str, str]]
    hasse: List[Tuple[str, str]]
    non_arcs: List[NonArc]
    hasse_matches: bool
    corpus_size: int
    ordering_checks: int
    ordering_failures: List[OrderingCheck]


class LayeredReport(TypedDict):
    """Outcome of the two layered-search fixtures."""

    g_completions_valid: Dict[str, bool]
    h_completions_valid: Dict[str, bool]
    g_labels: Dict[int, List[int]]
    h_labels: Dict[int, List[int]]
    same_labels: bool
    contradiction: bool
