"""
Layered search fixtures: two graphs where the same pair of labels must be
incomparable in one and strictly ordered in the other, so no label order
reproduces layered search.
"""

from typing import Dict, List, Sequence

import networkx as nx

from engine import left_dates
from graphs import Graph, VertexOrdering

from .expected import (
    FORWARD_COMPLETION,
    LAYERED_G,
    LAYERED_H,
    LAYERED_PREFIX,
    REVERSED_COMPLETION,
)
from .hierarchy_types import LayeredReport


def to_networkx(graph: Graph) -> nx.Graph:
    """Undirected networkx copy on the same vertex names."""
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(graph.vertices())
    nx_graph.add_edges_from(graph.edges())
    return nx_graph


def is_layered_ordering(graph: Graph, sigma: VertexOrdering) -> bool:
    """
    Within each component, distances from the component's first visited
    vertex never decrease along sigma.
    """
    nx_graph = to_networkx(graph)
    distance: Dict[int, int] = {}
    last: Dict[int, int] = {}
    root_of: Dict[int, int] = {}
    for v in sigma:
        if v not in distance:
            for w, d in nx.single_source_shortest_path_length(nx_graph, v).items():
                distance[w] = d
                root_of[w] = v
        root = root_of[v]
        if distance[v] < last.get(root, 0):
            return False
        last[root] = distance[v]
    return True


def _completion_labels(graph: Graph, completion: Sequence[int]) -> Dict[int, List[int]]:
    sigma = VertexOrdering.from_sequence(LAYERED_PREFIX + tuple(completion))
    step = len(LAYERED_PREFIX) + 1
    return {v: list(left_dates(graph, sigma, v, sigma.at(step))) for v in completion}


def _completions_valid(graph: Graph) -> Dict[str, bool]:
    return {
        " ".join(map(str, completion)): is_layered_ordering(
            graph, VertexOrdering.from_sequence(LAYERED_PREFIX + completion)
        )
        for completion in (FORWARD_COMPLETION, REVERSED_COMPLETION)
    }


def layered_fixture_check() -> LayeredReport:
    """
    In G both completions of the prefix 1 2 3 4 are layered, so the labels
    of 5 and 6 must be incomparable; in H only 5 before 6 is, so the same
    labels must be comparable.
    """
    g_valid = _completions_valid(LAYERED_G)
    h_valid = _completions_valid(LAYERED_H)
    g_labels = _completion_labels(LAYERED_G, FORWARD_COMPLETION)
    h_labels = _completion_labels(LAYERED_H, FORWARD_COMPLETION)
    same_labels = g_labels == h_labels
    return LayeredReport(
        g_completions_valid=g_valid,
        h_completions_valid=h_valid,
        g_labels=g_labels,
        h_labels=h_labels,
        same_labels=same_labels,
        contradiction=same_labels
        and all(g_valid.values())
        and list(h_valid.values()) == [True, False],
    )
