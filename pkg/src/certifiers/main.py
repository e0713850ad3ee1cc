"""Routing an order token to its certifier."""

from engine import check_fixpoint
from graphs import Graph, VertexOrdering, prefix_neighbor_tables
from labels import LabelOrder

from .bfs import check_bfs
from .cert_types import Certificate
from .dfs import check_dfs
from .generic import check_generic
from .lex import check_lbfs, check_ldfs

SPECIALIZED = ("gen", "bfs", "dfs", "lbfs", "ldfs")


def certify(
    graph: Graph,
    order: LabelOrder,
    sigma: VertexOrdering,
    engine: str = "auto",
    full_table: bool = False,
) -> Certificate:
    """
    gen, bfs and dfs use the linear certifiers, lbfs and ldfs the pattern
    tables. Every other order, and any directed graph, goes to the
    fixpoint oracle.
    """
    if len(sigma) != graph.n:
        raise ValueError(f"ordering has {len(sigma)} vertices, graph has {graph.n}")
    if graph.directed or order.id not in SPECIALIZED:
        return check_fixpoint(graph, order, sigma, engine)
    if order.id == "lbfs":
        return check_lbfs(graph, sigma, full_table)
    if order.id == "ldfs":
        return check_ldfs(graph, sigma, full_table)
    tables = prefix_neighbor_tables(graph, sigma)
    generic = check_generic(graph, sigma, tables)
    if order.id == "gen" or not generic.accepted:
        return generic
    if order.id == "bfs":
        return check_bfs(graph, sigma, tables, generic)
    return check_dfs(graph, sigma, tables, generic)
