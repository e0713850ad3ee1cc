"""Engine selection and the pairwise and fixpoint oracles."""

import logging
from typing import Optional

from certifiers.cert_types import Certificate, Rule
from graphs import Graph, VertexOrdering
from labels import LabelOrder

from .engine_types import ENGINES, SearchResult, TotalityViolation, TraceHook
from .fast import tbls_fast
from .reference import left_positions, prefix_label, tbls_run

logger = logging.getLogger(__name__)


def choose_engine(order: LabelOrder, engine: str = "auto") -> str:
    """Resolve "auto" to fast for prioritised orders and ref otherwise."""
    if engine not in ENGINES:
        raise ValueError(
            f"unknown engine {engine!r}, expected one of {', '.join(ENGINES)}"
        )
    if engine == "auto":
        return "fast" if order.priority is not None else "ref"
    return engine


def search(
    graph: Graph,
    order: LabelOrder,
    tau: VertexOrdering,
    engine: str = "auto",
    trace: Optional[TraceHook] = None,
) -> SearchResult:
    """
    Run the search with the requested engine. A trace forces the reference
    engine; a fast run on a non-total order falls back to the reference run.
    """
    chosen = "ref" if trace is not None else choose_engine(order, engine)
    if chosen == "fast":
        try:
            return SearchResult(tbls_fast(graph, order, tau), "fast")
        except TotalityViolation as error:
            logger.warning(
                "order %s is not total on live labels (%s), "
                "falling back to the reference engine",
                order,
                error,
            )
            return SearchResult(
                tbls_run(graph, order, tau), "ref", fallback_reason=str(error)
            )
    return SearchResult(tbls_run(graph, order, tau, trace), "ref")


def check_pairwise(
    graph: Graph, order: LabelOrder, sigma: VertexOrdering
) -> Certificate:
    """
    Accept iff no x before y has label(x) below label(y), both labels taken
    just before x is visited. Rejects with the first such pair.
    """
    if len(sigma) != graph.n:
        raise ValueError(f"ordering has {len(sigma)} vertices, graph has {graph.n}")
    positions = left_positions(graph, sigma)
    for i, x in enumerate(sigma, start=1):
        label_x = prefix_label(positions[x], i)
        for j in range(i + 1, graph.n + 1):
            y = sigma.at(j)
            label_y = prefix_label(positions[y], i)
            if order.less(label_x, label_y):
                return Certificate.reject(
                    Rule.PAIRWISE,
                    sigma,
                    [x, y],
                    order=order.id,
                    label_x=list(label_x),
                    label_y=list(label_y),
                )
    return Certificate.accept(order=order.id)


def check_fixpoint(
    graph: Graph, order: LabelOrder, sigma: VertexOrdering, engine: str = "ref"
) -> Certificate:
    """
    Accept iff searching with sigma as the tie-break reproduces sigma.
    Rejects at the first index where the run picks another vertex.
    """
    rerun = search(graph, order, sigma, engine)
    replay = rerun.ordering
    for i, (expected, chosen) in enumerate(zip(sigma, replay), start=1):
        if expected != chosen:
            positions = left_positions(graph, sigma)
            return Certificate.reject(
                Rule.FIXPOINT,
                sigma,
                [expected, chosen],
                order=order.id,
                index=i,
                expected=expected,
                engine_choice=chosen,
                label_expected=list(prefix_label(positions[expected], i)),
                label_chosen=list(prefix_label(positions[chosen], i)),
                engine=rerun.engine,
            )
    return Certificate.accept(order=order.id, engine=rerun.engine)
