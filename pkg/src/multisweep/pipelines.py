"""Unit interval and cocomparability recognition by repeated LBFS sweeps."""

import logging
from typing import Optional, TypedDict

from certifiers import Certificate
from graphs import Graph, VertexOrdering
from labels import LBFS

from .sweep import SweepTrace, sweep_sequence
from .validators import is_cocomp_ordering, is_unit_interval_ordering

logger = logging.getLogger(__name__)

UNIT_INTERVAL_SWEEPS = 3


class PipelineResult(TypedDict):
    """Final ordering, its certificate and the sweeps that produced it."""

    ordering: VertexOrdering
    certificate: Certificate
    trace: SweepTrace


def _seed_or_identity(graph: Graph, seed: Optional[VertexOrdering]) -> VertexOrdering:
    return VertexOrdering.identity(graph.n) if seed is None else seed


def recognize_unit_interval(
    graph: Graph, seed: Optional[VertexOrdering] = None
) -> PipelineResult:
    """Three LBFS sweeps; accept iff the last one is a unit interval ordering."""
    trace = sweep_sequence(
        graph, LBFS, _seed_or_identity(graph, seed), UNIT_INTERVAL_SWEEPS
    )
    final = trace["orderings"][-1]
    certificate = is_unit_interval_ordering(graph, final)
    logger.info("unit interval check on n=%d: %s", graph.n, certificate.accepted)
    return PipelineResult(ordering=final, certificate=certificate, trace=trace)


def cocomp_pipeline(
    graph: Graph, seed: Optional[VertexOrdering] = None
) -> PipelineResult:
    """n LBFS sweeps; accept iff the last one is umbrella-free."""
    trace = sweep_sequence(graph, LBFS, _seed_or_identity(graph, seed), graph.n)
    final = trace["orderings"][-1]
    certificate = is_cocomp_ordering(graph, final)
    logger.info("cocomparability check on n=%d: %s", graph.n, certificate.accepted)
    return PipelineResult(ordering=final, certificate=certificate, trace=trace)
