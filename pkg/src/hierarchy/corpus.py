"""Small-graph corpora for ordering-level checks."""

import logging
from pathlib import Path
from typing import List

import networkx as nx
import numpy as np

from graphs import Graph, VertexOrdering, random_ordering, read_graph

logger = logging.getLogger(__name__)

# networkx's atlas lists every graph on up to seven vertices
ATLAS_MAX_N = 7
CORPUS_SUFFIXES = (".txt", ".graph")


def graph_from_networkx(nx_graph: nx.Graph) -> Graph:
    """Relabel nodes 1..n in sorted order."""
    index = {node: i for i, node in enumerate(sorted(nx_graph.nodes), start=1)}
    return Graph.from_edges(
        len(index), ((index[u], index[v]) for u, v in nx_graph.edges)
    )


def small_graph_corpus(max_n: int) -> List[Graph]:
    """All graphs with 1 <= n <= max_n, up to isomorphism."""
    if not 1 <= max_n <= ATLAS_MAX_N:
        raise ValueError(f"corpus size must be in 1..{ATLAS_MAX_N}, got {max_n}")
    return [
        graph_from_networkx(g)
        for g in nx.graph_atlas_g()
        if 1 <= g.number_of_nodes() <= max_n
    ]


def load_corpus(directory: Path) -> List[Graph]:
    """Every edge-list file in directory, in name order."""
    if not directory.is_dir():
        raise ValueError(f"corpus directory {directory} does not exist")
    paths = sorted(p for p in directory.iterdir() if p.suffix in CORPUS_SUFFIXES)
    logger.debug("loading %d corpus graphs from %s", len(paths), directory)
    return [read_graph(path) for path in paths]


def random_tau(n: int, rng: np.random.Generator) -> VertexOrdering:
    """A random tie-break permutation."""
    return random_ordering(n, rng)
