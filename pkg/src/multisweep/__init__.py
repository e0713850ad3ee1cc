"""__init__.py for the multisweep package."""

from .generators import (
    gen_permutation_graph,
    gen_unit_interval_graph,
    graph_from_intervals,
    permutation_graph,
    plant_claw,
)
from .pipelines import (
    UNIT_INTERVAL_SWEEPS,
    PipelineResult,
    cocomp_pipeline,
    recognize_unit_interval,
)
from .sweep import SweepTrace, sweep_sequence
from .validators import is_cocomp_ordering, is_unit_interval_ordering
