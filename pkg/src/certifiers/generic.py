"""Linear-time recognition of generic search orderings."""

from typing import Optional

from graphs import (
    NO_NEIGHBOUR,
    Graph,
    PrefixNeighborTables,
    VertexOrdering,
    prefix_neighbor_tables,
)

from .cert_types import Certificate, Rule, require_undirected


def check_generic(
    graph: Graph, sigma: VertexOrdering, tables: Optional[PrefixNeighborTables] = None
) -> Certificate:
    """
    Left-to-right scan keeping J, the start of the current component run.
    A vertex whose leftmost neighbour precedes J breaks the GEN pattern:
    the witness is (that neighbour, sigma(J), the vertex).
    """
    require_undirected(graph)
    if tables is None:
        tables = prefix_neighbor_tables(graph, sigma)
    start = 1
    for i in range(2, graph.n + 1):
        ln = tables.ln[sigma.at(i)]
        if ln == NO_NEIGHBOUR:
            start = i
        elif ln < start:
            return Certificate.reject(
                Rule.GEN_TRIPLE,
                sigma,
                [sigma.at(ln), sigma.at(start), sigma.at(i)],
                index=i,
                component_start=start,
            )
    return Certificate.accept()
