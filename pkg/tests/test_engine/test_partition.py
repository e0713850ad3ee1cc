"""
This file contains the tests for the engine/partition.py file.
"""

# pylint: disable=redefined-outer-name unused-argument unused-import

from engine import OrderedPartition, refine
from graphs import VertexOrdering
from labels import BFS


def test_single_split() -> None:
    """The pivot half gets the date and sits in front."""
    partition = OrderedPartition(VertexOrdering.identity(3))
    refine(partition, {2}, 1)
    assert partition.as_lists() == [([2], (1,)), ([1, 3], ())]
    partition.check_invariants()


def test_disjoint_pivot_is_a_no_op() -> None:
    """Vertices outside the partition are ignored."""
    partition = OrderedPartition(VertexOrdering.identity(3))
    partition.pop_head(partition.first)
    before = partition.as_lists()
    assert not partition.refine([1], 1)
    assert partition.as_lists() == before


def test_refine_after_first_visit() -> None:
    """Visiting 1 on the path 3-1-2-4 splits off its neighbours."""
    partition = OrderedPartition(VertexOrdering.identity(4), BFS)
    assert partition.pop_head(partition.first) == 1
    partition.refine([3, 2], 1)
    assert partition.as_lists() == [([2, 3], (1,)), ([4], ())]
    assert 1 not in partition
    assert partition.part_of[3].key == 1
    partition.check_invariants()


def test_refine_returns_only_new_parts() -> None:
    """The surviving part stays put and its head moves right."""
    partition = OrderedPartition(VertexOrdering.identity(3))
    original = partition.first
    fresh = partition.refine([1], 1)
    assert [part.label for part in fresh] == [(1,)]
    assert fresh[0].next is original
    assert original.head() == 2
    assert original.live_members() == [2, 3]


def test_whole_part_pivot_unlinks_original() -> None:
    """A part fully covered by the pivot is replaced, not left empty."""
    partition = OrderedPartition(VertexOrdering.from_sequence([2, 1]))
    original = partition.first
    partition.refine([1, 2], 1)
    assert not original.alive
    assert partition.as_lists() == [([2, 1], (1,))]


def test_pop_head_unlinks_empty_part() -> None:
    """The last member leaving removes the part."""
    partition = OrderedPartition(VertexOrdering.identity(1))
    part = partition.first
    assert partition.pop_head(part) == 1
    assert not part.alive
    assert partition.first is None
    assert not list(partition)


def test_empty_partition() -> None:
    """n = 0 has no parts."""
    partition = OrderedPartition(VertexOrdering.identity(0))
    assert partition.as_lists() == []
