"""Linear-time recognition of BFS orderings."""

from typing import Optional

from graphs import (
    NO_NEIGHBOUR,
    Graph,
    PrefixNeighborTables,
    VertexOrdering,
    prefix_neighbor_tables,
)

from .cert_types import Certificate, PreconditionError, Rule, require_undirected
from .generic import check_generic


def ensure_generic(
    graph: Graph,
    sigma: VertexOrdering,
    tables: PrefixNeighborTables,
    generic: Optional[Certificate],
) -> Optional[Certificate]:
    """
    Run the GEN check unless the caller already did. Returns its rejection,
    or None when sigma is a GEN ordering.
    """
    if generic is None:
        generic = check_generic(graph, sigma, tables)
        return None if generic.accepted else generic
    if not generic.accepted:
        raise PreconditionError(
            "ordering is not a generic search ordering; "
            "run check_generic and report its witness"
        )
    return None


def check_bfs(
    graph: Graph,
    sigma: VertexOrdering,
    tables: Optional[PrefixNeighborTables] = None,
    generic: Optional[Certificate] = None,
) -> Certificate:
    """
    Right-to-left scan holding the smallest ln seen so far. A vertex whose
    ln exceeds it has a Left interval strictly inside a later one.
    """
    require_undirected(graph)
    if tables is None:
        tables = prefix_neighbor_tables(graph, sigma)
    failed = ensure_generic(graph, sigma, tables, generic)
    if failed is not None:
        return failed
    lowest = keeper = graph.n
    for i in range(graph.n, 0, -1):
        ln = tables.ln[sigma.at(i)]
        if ln == NO_NEIGHBOUR:
            continue
        if ln > lowest:
            return Certificate.reject(
                Rule.BFS_TRIPLE,
                sigma,
                [sigma.at(lowest), sigma.at(i), sigma.at(keeper)],
                index=i,
                ln=ln,
                min=lowest,
            )
        lowest, keeper = ln, i
    return Certificate.accept()
