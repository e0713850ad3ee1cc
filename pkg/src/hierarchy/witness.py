"""
Witness graphs: for A not below B under S, a graph and an S-ordering in
which the second-to-last vertex is visited with label A while the last
vertex still holds label B.
"""

from typing import Iterable, List, Tuple

from engine import check_fixpoint, left_dates
from graphs import Graph, VertexOrdering
from labels import LabelOrder, LabelSet, label_set

from .hierarchy_types import ConstructionError


def witness_edges(
    order: LabelOrder, a: LabelSet, b: LabelSet, p: int
) -> List[Tuple[int, int]]:
    """
    z_i z_k for k < i <= p - 2, taking k from B when the prefixes of A and
    B below i compare A-below-B, else from A; then z_{p-1} to A and z_p to B.
    """
    a_members, b_members = set(a), set(b)
    edges: List[Tuple[int, int]] = []
    for i in range(2, p - 1):
        prefix_a = tuple(k for k in a if k < i)
        prefix_b = tuple(k for k in b if k < i)
        source = b_members if order.less(prefix_a, prefix_b) else a_members
        edges.extend((i, k) for k in range(1, i) if k in source)
    edges.extend((p - 1, k) for k in a)
    edges.extend((p, k) for k in b)
    return edges


def witness_graph(
    order: LabelOrder, a: Iterable[int], b: Iterable[int], p: int
) -> Tuple[Graph, VertexOrdering]:
    """Build the witness graph on z_1..z_p with sigma the identity."""
    label_a, label_b = label_set(a), label_set(b)
    if p < 2:
        raise ConstructionError(f"p must be at least 2, got {p}")
    outside = sorted({k for k in label_a + label_b if k > p - 2})
    if outside:
        raise ConstructionError(
            f"labels must lie in 1..{p - 2}, got {' '.join(map(str, outside))}"
        )
    if order.less(label_a, label_b):
        raise ConstructionError(
            f"{set(label_a) or '{}'} is below {set(label_b) or '{}'} under {order}; "
            "no ordering can visit the A-labelled vertex first"
        )
    graph = Graph.from_edges(p, witness_edges(order, label_a, label_b, p))
    sigma = VertexOrdering.identity(p)
    certificate = check_fixpoint(graph, order, sigma)
    if not certificate.accepted:
        raise ConstructionError(
            f"identity is not an {order} ordering: {certificate.detail}"
        )
    if (
        left_dates(graph, sigma, p - 1, p - 1) != label_a
        or left_dates(graph, sigma, p, p - 1) != label_b
    ):
        raise ConstructionError("labels at step p - 1 differ from A and B")
    return graph, sigma
