"""Recognition of DFS orderings by interval overlap."""

from typing import List, Optional, Tuple

from graphs import (
    NO_NEIGHBOUR,
    Graph,
    PrefixNeighborTables,
    VertexOrdering,
    prefix_neighbor_tables,
)

from .bfs import ensure_generic
from .cert_types import Certificate, Rule, require_undirected


def check_dfs(
    graph: Graph,
    sigma: VertexOrdering,
    tables: Optional[PrefixNeighborTables] = None,
    generic: Optional[Certificate] = None,
) -> Certificate:
    """
    Reject on x != y with RLeft(y) = [a, b] and Right(x) = [c, d] such that
    a < c <= b < d, i.e. lmax(y) < x < y < rn(x) in sigma.

    Positions are scanned left to right with a stack of (p, R(p)) where
    R(p) is rn(sigma(p)) or p itself, R strictly decreasing upwards. At y the
    entries above lmax(y) are popped; the last one popped has the widest
    reach. If that reach ends by q they are all spent for later positions.
    """
    require_undirected(graph)
    if tables is None:
        tables = prefix_neighbor_tables(graph, sigma)
    failed = ensure_generic(graph, sigma, tables, generic)
    if failed is not None:
        return failed
    stack_pos: List[int] = []
    stack_reach: List[int] = []
    for q in range(1, graph.n + 1):
        y = sigma.at(q)
        lmax = tables.lmax[y]
        if lmax != NO_NEIGHBOUR:
            widest: Optional[Tuple[int, int]] = None
            while stack_pos and stack_pos[-1] > lmax:
                widest = stack_pos.pop(), stack_reach.pop()
            if widest is not None and widest[1] > q:
                x = sigma.at(widest[0])
                return Certificate.reject(
                    Rule.DFS_TRIPLE,
                    sigma,
                    [x, y, sigma.at(widest[1])],
                    right_x=list(tables.right(x)),
                    rleft_y=list(tables.rleft(y)),
                )
        rn = tables.rn[y]
        reach = q if rn == NO_NEIGHBOUR else rn
        while stack_reach and stack_reach[-1] <= reach:
            stack_pos.pop()
            stack_reach.pop()
        stack_pos.append(q)
        stack_reach.append(reach)
    return Certificate.accept()
