"""__init__.py for the engine package."""

from .engine_types import (
    DEBUG,
    ENGINES,
    EngineState,
    SearchResult,
    TotalityViolation,
    TraceStep,
)
from .fast import tbls_fast
from .main import check_fixpoint, check_pairwise, choose_engine, search
from .partition import OrderedPartition, Part, refine
from .reference import eligible_set, left_dates, tbls_run
