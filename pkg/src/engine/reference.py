"""
Reference implementation of the tie-breaking label search.
Quadratic in the number of unnumbered vertices per step; this is the
correctness oracle for everything else.
"""

from bisect import bisect_left
from typing import List, Optional, Set

from graphs import Graph, VertexOrdering
from labels import LabelOrder, LabelSet

from .engine_types import DEBUG, EngineState, TraceHook, TraceStep


def eligible_set(state: EngineState, order: LabelOrder) -> Set[int]:
    """The unnumbered vertices whose label is maximal under order."""
    labels = state.labels
    return {
        x
        for x, label in labels.items()
        if not any(order.less(label, other) for other in labels.values())
    }


def _check_tau(graph: Graph, tau: VertexOrdering) -> None:
    if len(tau) != graph.n:
        raise ValueError(
            f"tie-break ordering has {len(tau)} vertices, graph has {graph.n}"
        )


def tbls_run(
    graph: Graph,
    order: LabelOrder,
    tau: VertexOrdering,
    trace: Optional[TraceHook] = None,
) -> VertexOrdering:
    """
    Run the search: at each step visit the tau-leftmost eligible vertex,
    then add the step's date to the labels of its unnumbered neighbours.
    """
    _check_tau(graph, tau)
    state = EngineState.initial(graph)
    visited: List[int] = []
    for _ in range(graph.n):
        eligible = eligible_set(state, order)
        chosen = min(eligible, key=tau.pos)
        if trace is not None:
            trace(
                TraceStep(
                    step=state.step,
                    eligible=sorted(eligible, key=tau.pos),
                    labels={v: list(state.labels[v]) for v in sorted(state.labels)},
                    chosen=chosen,
                )
            )
        state.visit(graph, chosen)
        visited.append(chosen)
        if DEBUG:
            _assert_label_invariant(graph, state, visited)
    return VertexOrdering.from_sequence(visited)


def _assert_label_invariant(
    graph: Graph, state: EngineState, visited: List[int]
) -> None:
    """Each unnumbered label is the set of dates of its visited in-neighbours."""
    assert len(state.numbered) == state.step - 1
    for v, label in state.labels.items():
        expected = tuple(
            sorted(
                state.numbered[u]
                for u in graph.predecessors[v]
                if u in state.numbered
            )
        )
        assert label == expected, f"label of {v} is {label}, expected {expected}"
    assert [state.numbered[v] for v in visited] == list(range(1, len(visited) + 1))


def left_positions(graph: Graph, ordering: VertexOrdering) -> List[List[int]]:
    """For each vertex, the sorted positions of its in-neighbours."""
    table: List[List[int]] = [[] for _ in range(graph.n + 1)]
    for v in graph.vertices():
        table[v] = sorted(ordering.pos(u) for u in graph.predecessors[v])
    return table


def left_dates(graph: Graph, ordering: VertexOrdering, u: int, v: int) -> LabelSet:
    """Visiting dates of the neighbours of u placed strictly before v."""
    limit = ordering.pos(v)
    return tuple(
        sorted(
            ordering.pos(w)
            for w in graph.predecessors[u]
            if ordering.pos(w) < limit
        )
    )


def prefix_label(positions: List[int], limit: int) -> LabelSet:
    """The dates in a sorted position list that are strictly below limit."""
    return tuple(positions[: bisect_left(positions, limit)])
