"""Operations on graphs and orderings."""

from typing import List

import numpy as np

from .graph_types import NO_NEIGHBOUR, Graph, PrefixNeighborTables, VertexOrdering


def reverse_ordering(ordering: VertexOrdering) -> VertexOrdering:
    """sigma^r, with sigma^r(i) = sigma(n + 1 - i)."""
    n = len(ordering)
    position = [0] * (n + 1)
    for v in ordering:
        position[v] = n + 1 - ordering.pos(v)
    return VertexOrdering(tuple(reversed(ordering.order)), tuple(position))


def random_ordering(n: int, rng: np.random.Generator) -> VertexOrdering:
    """A uniformly random permutation of 1..n drawn from rng."""
    perm = rng.permutation(n) + 1
    return VertexOrdering.from_sequence([int(v) for v in perm])


def prefix_neighbor_tables(
    graph: Graph, ordering: VertexOrdering
) -> PrefixNeighborTables:
    """
    ln/rn/lmax for every vertex in a single pass over the adjacency lists.
    """
    n = graph.n
    position = ordering.position
    ln: List[int] = [NO_NEIGHBOUR] * (n + 1)
    rn: List[int] = [NO_NEIGHBOUR] * (n + 1)
    lmax: List[int] = [NO_NEIGHBOUR] * (n + 1)
    for x in graph.vertices():
        px = position[x]
        lo = hi = right = NO_NEIGHBOUR
        for y in graph.adjacency[x]:
            py = position[y]
            if py < px:
                if lo == NO_NEIGHBOUR or py < lo:
                    lo = py
                if py > hi:
                    hi = py
            elif py > right:
                right = py
        ln[x], lmax[x], rn[x] = lo, hi, right
    return PrefixNeighborTables(ordering, tuple(ln), tuple(rn), tuple(lmax))
