"""
__init__.py for the certifiers package.
certify lives in certifiers.main, which depends on the engine.
"""

from .bfs import check_bfs
from .cert_types import (
    ERROR_MARK,
    VACUOUS,
    Certificate,
    PatternTable,
    PreconditionError,
    Rule,
    UnsupportedGraphError,
    Witness,
    require_undirected,
)
from .dfs import check_dfs
from .generic import check_generic
from .lex import build_pattern_table, check_lbfs, check_ldfs, check_lex
