"""
Seeded instance generators. All randomness comes from
numpy.random.default_rng(seed), i.e. PCG64 with a 64-bit seed.
"""

from typing import List, Sequence, Tuple

import numpy as np

from graphs import Graph, VertexOrdering


def graph_from_intervals(lefts: Sequence[float]) -> Graph:
    """Unit intervals [l, l + 1]; vertex i is the interval starting at lefts[i - 1]."""
    n = len(lefts)
    by_left = sorted(range(1, n + 1), key=lambda v: lefts[v - 1])
    edges: List[Tuple[int, int]] = []
    for i, u in enumerate(by_left):
        for v in by_left[i + 1 :]:
            if lefts[v - 1] - lefts[u - 1] > 1:
                break
            edges.append((u, v))
    return Graph.from_edges(n, edges)


def gen_unit_interval_graph(n: int, seed: int) -> Graph:
    """n unit intervals with left endpoints drawn uniformly from [0, n/2]."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    return graph_from_intervals([float(x) for x in rng.uniform(0.0, n / 2, size=n)])


def permutation_graph(permutation: Sequence[int]) -> Graph:
    """i < j adjacent iff the permutation inverts them."""
    pi = VertexOrdering.from_sequence(permutation)
    n = len(pi)
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if pi.at(i) > pi.at(j)
    ]
    return Graph.from_edges(n, edges)


def gen_permutation_graph(n: int, seed: int) -> Graph:
    """Permutation graph of a uniformly random permutation of 1..n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = np.random.default_rng(seed)
    return permutation_graph([int(v) for v in rng.permutation(n) + 1])


def plant_claw(graph: Graph, seed: int) -> Graph:
    """
    Add a claw on four new vertices n+1 (centre) .. n+4, the centre also
    joined to one random existing vertex. The claw stays induced.
    """
    n = graph.n
    centre = n + 1
    edges = list(graph.edges()) + [(centre, leaf) for leaf in range(n + 2, n + 5)]
    if n:
        rng = np.random.default_rng(seed)
        edges.append((centre, int(rng.integers(1, n + 1))))
    return Graph.from_edges(n + 4, edges)
