"""
Ordered partition of the unnumbered vertices into equal-label parts.
Parts form a doubly linked list. Each part appends its members in tie-break
order and never removes them: a member has left once part_of no longer
points at the part, and the head pointer only moves forward.
"""

from itertools import count
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Tuple,
)

from graphs import VertexOrdering
from labels import EMPTY_LABEL, LabelOrder, LabelSet

_part_ids = count()

Owners = List[Optional["Part"]]


class Part:
    """A maximal set of unnumbered vertices sharing one label."""

    __slots__ = (
        "label",
        "key",
        "members",
        "start",
        "size",
        "owners",
        "prev",
        "next",
        "alive",
        "uid",
    )

    def __init__(self, label: LabelSet, owners: Owners, key: Any = None) -> None:
        self.label = label
        self.key = key
        self.members: List[int] = []
        self.start = 0
        self.size = 0
        self.owners = owners
        self.prev: Optional["Part"] = None
        self.next: Optional["Part"] = None
        self.alive = True
        self.uid = next(_part_ids)

    def head(self) -> int:
        """The tie-break-leftmost member."""
        members, owners = self.members, self.owners
        i = self.start
        while owners[members[i]] is not self:
            i += 1
        self.start = i
        return members[i]

    def live_members(self) -> List[int]:
        """Current members in tie-break order."""
        owners = self.owners
        return [v for v in self.members[self.start :] if owners[v] is self]

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Part({self.live_members()}, label={set(self.label) or '{}'})"


class OrderedPartition:
    """
    Parts listed front to back; a refined part's pivot half sits in front.
    Built once from the tie-break ordering; vertices leave through pop_head.
    With a prioritised order every part carries its label's priority as key,
    derived from the parent's key when the part is split off.
    """

    def __init__(self, tau: VertexOrdering, order: Optional[LabelOrder] = None) -> None:
        self.tau = tau
        self.order = order
        self.first: Optional[Part] = None
        self.part_of: Owners = [None] * (len(tau) + 1)
        self.remaining = len(tau)
        self._extend: Optional[Callable[[Any, int], Any]] = None
        key = None
        if order is not None and order.priority is not None:
            self._extend = order.extend_priority
            key = order.priority(EMPTY_LABEL)
        if len(tau):
            part = Part(EMPTY_LABEL, self.part_of, key)
            part.members = list(tau)
            part.size = len(tau)
            for v in tau:
                self.part_of[v] = part
            self.first = part

    def __iter__(self) -> Iterator[Part]:
        part = self.first
        while part is not None:
            yield part
            part = part.next

    def __contains__(self, v: int) -> bool:
        return 0 < v < len(self.part_of) and self.part_of[v] is not None

    def as_lists(self) -> List[Tuple[List[int], LabelSet]]:
        """Parts as (members, label) pairs, front to back."""
        return [(part.live_members(), part.label) for part in self]

    def _insert_before(self, new: Part, anchor: Part) -> None:
        new.prev = anchor.prev
        new.next = anchor
        if anchor.prev is None:
            self.first = new
        else:
            anchor.prev.next = new
        anchor.prev = new

    def _unlink(self, part: Part) -> None:
        if part.prev is None:
            self.first = part.next
        else:
            part.prev.next = part.next
        if part.next is not None:
            part.next.prev = part.prev
        part.alive = False
        part.prev = part.next = None

    def pop_head(self, part: Part) -> int:
        """Remove and return the head of part; an emptied part is unlinked."""
        v = part.head()
        self.part_of[v] = None
        self.remaining -= 1
        part.start += 1
        part.size -= 1
        if not part.size:
            self._unlink(part)
        return v

    def refine(
        self, pivot: Iterable[int], date: int, presorted: bool = False
    ) -> List[Part]:
        """
        Split every part Q meeting pivot into Q & pivot, labelled with date
        appended and placed immediately before Q, and Q - pivot.
        Returns the new parts in order of creation.
        """
        owners = self.part_of
        if not presorted:
            pivot = sorted((w for w in pivot if w in self), key=self.tau.pos)
        extend = self._extend
        split: Dict[Part, Part] = {}
        touched: List[Part] = []
        for w in pivot:
            part = owners[w]
            if part is None:
                continue
            new = split.get(part)
            if new is None:
                key = extend(part.key, date) if extend is not None else None
                new = Part(part.label + (date,), owners, key)
                self._insert_before(new, part)
                split[part] = new
                touched.append(new)
            part.size -= 1
            new.members.append(w)
            new.size += 1
            owners[w] = new
        for part in split:
            if not part.size:
                self._unlink(part)
        return touched

    def check_invariants(self, labels: Optional[Mapping[int, LabelSet]] = None) -> None:
        """
        Parts are non-empty, tau-sorted, distinctly labelled and cover exactly
        the unnumbered vertices. Given the true labels, every member carries
        its part's label.
        """
        seen_labels = set()
        total = 0
        for part in self:
            members = part.live_members()
            assert part.alive and members, f"empty part {part!r}"
            assert len(members) == part.size, f"size drift in {part!r}"
            positions = [self.tau.pos(v) for v in members]
            assert positions == sorted(positions), f"unsorted part {part!r}"
            assert part.label not in seen_labels, f"duplicate label {part.label}"
            seen_labels.add(part.label)
            if labels is not None:
                for v in members:
                    assert labels[v] == part.label, (
                        f"vertex {v} has label {labels[v]}, its part {part.label}"
                    )
            total += len(members)
        assert total == self.remaining
        if labels is not None:
            assert set(labels) == {v for v in self.tau if v in self}


def refine(
    partition: OrderedPartition, pivot: Iterable[int], date: int
) -> OrderedPartition:
    """Refine partition in place by pivot and return it."""
    partition.refine(pivot, date)
    return partition
