"""__init__.py for the graphs package."""

from .graph_types import (
    NO_NEIGHBOUR,
    Graph,
    GraphParseError,
    OrderingParseError,
    PrefixNeighborTables,
    VertexOrdering,
)
from .main import prefix_neighbor_tables, random_ordering, reverse_ordering
from .parse import (
    graph_to_text,
    ordering_to_text,
    parse_graph,
    parse_ordering,
    read_graph,
    read_ordering,
)
