"""__init__.py for the hierarchy package."""

from .corpus import (
    ATLAS_MAX_N,
    graph_from_networkx,
    load_corpus,
    random_tau,
    small_graph_corpus,
)
from .expected import EXPECTED_HASSE, LAYERED_G, LAYERED_H
from .extension import (
    check_label_extension,
    hasse_arcs,
    ordering_level_extension,
    separation,
    subsets,
    verify_hierarchy,
)
from .hierarchy_types import (
    DEFAULT_LABEL_UNIVERSE,
    MAX_HIERARCHY_UNIVERSE,
    MAX_LABEL_UNIVERSE,
    ConstructionError,
    HierarchyReport,
    LayeredReport,
)
from .layered import is_layered_ordering, layered_fixture_check, to_networkx
from .witness import witness_edges, witness_graph
