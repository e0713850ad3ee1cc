"""
This file contains the tests for the multisweep/generators.py file.
"""

# pylint: disable=redefined-outer-name unused-argument unused-import

import pytest

from multisweep import (
    gen_permutation_graph,
    gen_unit_interval_graph,
    graph_from_intervals,
    permutation_graph,
    plant_claw,
)


def test_single_interval() -> None:
    """n = 1 gives K1."""
    graph = gen_unit_interval_graph(1, 5)
    assert graph.n == 1
    assert graph.m == 0


def test_equal_intervals_are_complete() -> None:
    """Identical intervals all meet."""
    assert graph_from_intervals([0.5] * 4).m == 6


def test_touching_intervals_meet() -> None:
    """Closed intervals sharing an endpoint intersect."""
    graph = graph_from_intervals([0.0, 1.0, 2.5])
    assert list(graph.edges()) == [(1, 2)]


def test_generators_are_seeded() -> None:
    """The same seed gives the same graph."""
    assert gen_unit_interval_graph(30, 11) == gen_unit_interval_graph(30, 11)
    assert gen_permutation_graph(30, 11) == gen_permutation_graph(30, 11)


def test_permutation_graph() -> None:
    """Inversions become edges."""
    assert permutation_graph([1, 2, 3, 4]).m == 0
    assert permutation_graph([4, 3, 2, 1]).m == 6
    assert list(permutation_graph([2, 1, 3]).edges()) == [(1, 2)]


def test_plant_claw() -> None:
    """Four new vertices form an induced claw."""
    graph = plant_claw(gen_permutation_graph(6, 2), 2)
    assert graph.n == 10
    centre = 7
    leaves = (8, 9, 10)
    assert all(graph.has_edge(centre, leaf) for leaf in leaves)
    assert not any(graph.has_edge(u, v) for u in leaves for v in leaves if u < v)
    assert len(graph.neighbours(centre)) == 4


@pytest.mark.parametrize("generator", [gen_unit_interval_graph, gen_permutation_graph])
def test_rejects_empty(generator) -> None:
    """n must be positive."""
    with pytest.raises(ValueError):
        generator(0, 1)
