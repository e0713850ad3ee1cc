"""
Partition-refinement engine. Prioritised orders run in O((n + m) log n)
with a heap of plain tuples (key, head position, part id, part). A part's
key never changes and its head only moves right in tau, so an entry whose
head position went stale is pushed again when it surfaces; entries of dead
parts are dropped. Other orders scan the live parts: the part visited must
strictly dominate every other live part, otherwise TotalityViolation.
"""

import heapq
from typing import Any, List, Optional, Tuple

from graphs import Graph, VertexOrdering
from labels import LabelOrder

from .engine_types import DEBUG, EngineState, TotalityViolation
from .partition import OrderedPartition, Part
from .reference import _check_tau

HeapEntry = Tuple[Any, int, int, Part]


def _tau_sorted_adjacency(graph: Graph, tau: VertexOrdering) -> List[List[int]]:
    """Out-neighbour lists in tau order, built by one bucket pass."""
    adjacency: List[List[int]] = [[] for _ in range(graph.n + 1)]
    for w in tau:
        for u in graph.predecessors[w]:
            adjacency[u].append(w)
    return adjacency


def _dominating_part(partition: OrderedPartition, order: LabelOrder) -> Part:
    """The live part whose label is above every other live label."""
    parts = list(partition)
    best = parts[0]
    for part in parts[1:]:
        if order.less(best.label, part.label):
            best = part
    for part in parts:
        if part is not best and not order.less(part.label, best.label):
            raise TotalityViolation(best.label, part.label)
    return best


def tbls_fast(graph: Graph, order: LabelOrder, tau: VertexOrdering) -> VertexOrdering:
    """Same output as tbls_run whenever order is total on the live labels."""
    _check_tau(graph, tau)
    adjacency = _tau_sorted_adjacency(graph, tau)
    partition = OrderedPartition(tau, order)
    state: Optional[EngineState] = EngineState.initial(graph) if DEBUG else None
    pos = tau.position
    heap: List[HeapEntry] = []
    prioritised = order.priority is not None

    def push(part: Part) -> None:
        heapq.heappush(heap, (part.key, pos[part.head()], part.uid, part))

    def pop_best() -> Part:
        while True:
            _, head_pos, _, part = heapq.heappop(heap)
            if part.alive:
                if pos[part.head()] == head_pos:
                    return part
                push(part)

    if prioritised and partition.first is not None:
        push(partition.first)
    visited: List[int] = []
    for date in range(1, graph.n + 1):
        part = pop_best() if prioritised else _dominating_part(partition, order)
        x = partition.pop_head(part)
        visited.append(x)
        fresh = partition.refine(adjacency[x], date, presorted=True)
        if prioritised:
            if part.alive:
                push(part)
            for new in fresh:
                push(new)
        if state is not None:
            state.visit(graph, x)
            partition.check_invariants(state.labels)
    return VertexOrdering.from_sequence(visited)
