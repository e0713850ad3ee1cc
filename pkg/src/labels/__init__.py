"""__init__.py for the labels package."""

from .label_types import (
    EMPTY_LABEL,
    INFINITY,
    Comparison,
    ExtendedDate,
    LabelOrder,
    LabelSet,
    UnknownOrderError,
)
from .main import compare, difference, is_strict_subset, label_set, umax, umin
from .orders import (
    BFS,
    BUILTIN_ORDERS,
    DFS,
    GEN,
    LBFS,
    LDFS,
    MCS,
    MNS,
    NULL_ORDER,
    meet,
    order_tokens,
    parse_order,
)
