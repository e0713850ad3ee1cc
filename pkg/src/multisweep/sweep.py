"""Multi-sweep driver: each sweep is tie-broken by the reverse of the previous one."""

import logging
from typing import List, TypedDict

from engine import search
from graphs import Graph, VertexOrdering, reverse_ordering
from labels import LabelOrder

logger = logging.getLogger(__name__)


class SweepTrace(TypedDict):
    """sigma_0 .. sigma_k and the engine used for each sweep after the seed."""

    order_id: str
    orderings: List[VertexOrdering]
    engines: List[str]


def sweep_sequence(
    graph: Graph,
    order: LabelOrder,
    seed: VertexOrdering,
    sweeps: int,
    engine: str = "auto",
) -> SweepTrace:
    """sigma_i = search(G, order, reverse(sigma_{i-1})) for i = 1..sweeps."""
    if sweeps < 0:
        raise ValueError(f"number of sweeps must be non-negative, got {sweeps}")
    if len(seed) != graph.n:
        raise ValueError(f"seed ordering has {len(seed)} vertices, graph has {graph.n}")
    trace = SweepTrace(order_id=order.id, orderings=[seed], engines=[])
    for i in range(1, sweeps + 1):
        result = search(graph, order, reverse_ordering(trace["orderings"][-1]), engine)
        logger.debug("sweep %d with %s (%s engine)", i, order, result.engine)
        trace["orderings"].append(result.ordering)
        trace["engines"].append(result.engine)
    return trace
