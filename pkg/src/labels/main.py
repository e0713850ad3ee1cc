"""Arithmetic on label sets."""

from typing import Iterable, List

from .label_types import INFINITY, Comparison, ExtendedDate, LabelOrder, LabelSet


def label_set(dates: Iterable[int]) -> LabelSet:
    """Normalize any collection of dates into a LabelSet."""
    result = tuple(sorted(set(dates)))
    if result and result[0] < 1:
        raise ValueError(f"visiting dates start at 1, got {result[0]}")
    return result


def umin(a: LabelSet) -> ExtendedDate:
    """Least date, or INFINITY for the empty set."""
    return a[0] if a else INFINITY


def umax(a: LabelSet) -> ExtendedDate:
    """Greatest date, or 0 for the empty set."""
    return a[-1] if a else 0


def difference(a: LabelSet, b: LabelSet) -> LabelSet:
    """a - b by a linear merge of the two sorted sequences."""
    result: List[int] = []
    j, nb = 0, len(b)
    for x in a:
        while j < nb and b[j] < x:
            j += 1
        if j == nb or b[j] != x:
            result.append(x)
    return tuple(result)


def is_strict_subset(a: LabelSet, b: LabelSet) -> bool:
    """a is a proper subset of b."""
    return len(a) < len(b) and not difference(a, b)


def first_difference(a: LabelSet, b: LabelSet) -> int:
    """
    Sign of the least element of the symmetric difference:
    -1 if it lies in a, 1 if in b, 0 if a == b. Stops at the first mismatch.
    """
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        if a[i] == b[j]:
            i += 1
            j += 1
        elif a[i] < b[j]:
            return -1
        else:
            return 1
    if i < na:
        return -1
    if j < nb:
        return 1
    return 0


def last_difference(a: LabelSet, b: LabelSet) -> int:
    """Like first_difference, for the greatest element of the symmetric difference."""
    i, j = len(a) - 1, len(b) - 1
    while i >= 0 and j >= 0:
        if a[i] == b[j]:
            i -= 1
            j -= 1
        elif a[i] > b[j]:
            return -1
        else:
            return 1
    if i >= 0:
        return -1
    if j >= 0:
        return 1
    return 0


def compare(order: LabelOrder, a: LabelSet, b: LabelSet) -> Comparison:
    """Compare a against b under order."""
    return order.compare(a, b)
