"""Unit interval and cocomparability ordering validators."""

from graphs import Graph, VertexOrdering, prefix_neighbor_tables

from certifiers import Certificate, Rule, require_undirected


def is_unit_interval_ordering(graph: Graph, sigma: VertexOrdering) -> Certificate:
    """
    Every closed neighbourhood must be a contiguous run of sigma. On the
    first vertex v that fails, the gap y next to v gives the triple.
    """
    require_undirected(graph)
    tables = prefix_neighbor_tables(graph, sigma)
    for v in sigma:
        lo, _ = tables.left(v)
        _, hi = tables.right(v)
        if hi - lo == len(graph.neighbours(v)):
            continue
        p = sigma.pos(v)
        closed = graph.neighbour_sets[v]
        for q in range(lo, hi + 1):
            y = sigma.at(q)
            if y == v or y in closed:
                continue
            if q > p:
                triple = [v, y, sigma.at(hi)]
            else:
                triple = [sigma.at(lo), y, v]
            return Certificate.reject(Rule.UNIT_INTERVAL, sigma, triple)
    return Certificate.accept()


def is_cocomp_ordering(graph: Graph, sigma: VertexOrdering) -> Certificate:
    """No umbrella: every x < y < z with xz in E has xy or yz in E."""
    require_undirected(graph)
    adjacent = graph.neighbour_sets
    for x, z in graph.edges():
        if sigma.pos(x) > sigma.pos(z):
            x, z = z, x
        for q in range(sigma.pos(x) + 1, sigma.pos(z)):
            y = sigma.at(q)
            if y not in adjacent[x] and y not in adjacent[z]:
                return Certificate.reject(Rule.COCOMP, sigma, [x, y, z])
    return Certificate.accept()
