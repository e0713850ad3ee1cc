"""
Extension checks between label orders, at the label level by exhaustive
enumeration and at the ordering level over a graph corpus.
"""

import logging
from itertools import permutations
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from certifiers.main import certify
from engine import check_fixpoint, search
from graphs import Graph, VertexOrdering
from labels import BUILTIN_ORDERS, LabelOrder, LabelSet

from .corpus import random_tau
from .expected import EXPECTED_HASSE
from .hierarchy_types import (
    DEFAULT_LABEL_UNIVERSE,
    MAX_LABEL_UNIVERSE,
    ExtensionWitness,
    HierarchyReport,
    NonArc,
    OrderingCheck,
    Separation,
)
from .witness import witness_graph

logger = logging.getLogger(__name__)


def subsets(u: int) -> List[LabelSet]:
    """Subsets of 1..u by binary counting; bit k stands for k + 1."""
    return [
        tuple(k + 1 for k in range(u) if mask >> k & 1) for mask in range(1 << u)
    ]


def check_label_extension(
    source: LabelOrder, target: LabelOrder, u: int
) -> ExtensionWitness:
    """
    None if target extends source over all subsets of 1..u, i.e. every
    A below B under source is also below under target. Otherwise the first
    (A, B) that fails, A enumerated in the outer loop.
    """
    if not 0 <= u <= MAX_LABEL_UNIVERSE:
        raise ValueError(f"label universe must be in 0..{MAX_LABEL_UNIVERSE}, got {u}")
    universe = subsets(u)
    for a in universe:
        for b in universe:
            if source.less(a, b) and not target.less(a, b):
                return a, b
    return None


def separation(
    source: LabelOrder, target: LabelOrder, a: LabelSet, b: LabelSet
) -> Separation:
    """A target ordering that source rejects, built from the label witness."""
    p = max(a + b, default=0) + 2
    graph, sigma = witness_graph(target, a, b, p)
    certificate = check_fixpoint(graph, source, sigma)
    return Separation(
        n=graph.n,
        edges=[[u, v] for u, v in graph.edges()],
        ordering=list(sigma),
        source_rejects=not certificate.accepted,
    )


def hasse_arcs(
    arcs: Sequence[Tuple[str, str]], orders: Sequence[str]
) -> List[Tuple[str, str]]:
    """Transitive reduction of the extension relation."""
    relation = nx.DiGraph()
    relation.add_nodes_from(orders)
    relation.add_edges_from(arcs)
    reduced = nx.transitive_reduction(relation)
    rank = {name: i for i, name in enumerate(orders)}
    return sorted(reduced.edges, key=lambda arc: (rank[arc[0]], rank[arc[1]]))


def ordering_level_failures(
    corpus: Sequence[Graph],
    arcs: Sequence[Tuple[str, str]],
    taus_per_graph: int,
    rng: np.random.Generator,
) -> Tuple[int, List[OrderingCheck]]:
    """
    For each arc source -> target, search every corpus graph under target
    with random tie-breaks and certify the result under source.
    """
    checks = 0
    failures: List[OrderingCheck] = []
    for source_id, target_id in arcs:
        source, target = BUILTIN_ORDERS[source_id], BUILTIN_ORDERS[target_id]
        for graph in corpus:
            for _ in range(taus_per_graph):
                sigma = search(graph, target, random_tau(graph.n, rng)).ordering
                checks += 1
                if not certify(graph, source, sigma).accepted:
                    failures.append(
                        OrderingCheck(
                            source=source_id,
                            target=target_id,
                            edges=[[u, v] for u, v in graph.edges()],
                            ordering=list(sigma),
                        )
                    )
    return checks, failures


def verify_hierarchy(
    u: int = DEFAULT_LABEL_UNIVERSE,
    corpus: Optional[Sequence[Graph]] = None,
    taus_per_graph: int = 2,
    seed: int = 0,
) -> HierarchyReport:
    """
    Label-level extension over every ordered pair of the built-in orders,
    a separating witness graph for every non-arc, and an ordering-level
    spot check of the expected Hasse arcs over the corpus.
    """
    orders = list(BUILTIN_ORDERS)
    arcs: List[Tuple[str, str]] = []
    non_arcs: List[NonArc] = []
    for source_id in orders:
        for target_id in orders:
            if source_id == target_id:
                continue
            source, target = BUILTIN_ORDERS[source_id], BUILTIN_ORDERS[target_id]
            found = check_label_extension(source, target, u)
            logger.debug("%s -> %s: %s", source_id, target_id, found or "extension")
            if found is None:
                arcs.append((source_id, target_id))
                continue
            a, b = found
            logger.info("%s does not extend %s: A=%s B=%s", target_id, source_id, a, b)
            non_arcs.append(
                NonArc(
                    source=source_id,
                    target=target_id,
                    a=list(a),
                    b=list(b),
                    separation=separation(source, target, a, b),
                )
            )
    hasse = hasse_arcs(arcs, orders)
    graphs = list(corpus or [])
    checks, failures = ordering_level_failures(
        graphs, EXPECTED_HASSE, taus_per_graph, np.random.default_rng(seed)
    )
    return HierarchyReport(
        max_label=u,
        orders=orders,
        arcs=arcs,
        hasse=hasse,
        non_arcs=non_arcs,
        hasse_matches=set(hasse) == set(EXPECTED_HASSE),
        corpus_size=len(graphs),
        ordering_checks=checks,
        ordering_failures=failures,
    )


def ordering_level_extension(
    corpus: Sequence[Graph], source: LabelOrder, target: LabelOrder
) -> bool:
    """Every target ordering of every corpus graph is a source ordering."""
    for graph in corpus:
        for order in permutations(graph.vertices()):
            sigma = VertexOrdering.from_sequence(order)
            if check_fixpoint(graph, target, sigma).accepted and not check_fixpoint(
                graph, source, sigma
            ).accepted:
                return False
    return True
