"""Type definitions for label sets and label orders."""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Final, List, Optional, Tuple, Union

# Strictly increasing visiting dates.
LabelSet = Tuple[int, ...]

# A finite date, INFINITY (umin of the empty set) or 0 (umax of the empty set).
ExtendedDate = Union[int, float]

INFINITY: Final = math.inf
EMPTY_LABEL: LabelSet = ()


class Comparison(Enum):
    """Outcome of comparing two labels under a strict partial order."""

    A_LESS_B = "ALessB"
    B_LESS_A = "BLessA"
    INCOMPARABLE = "Incomparable"


class UnknownOrderError(ValueError):
    """Raised for an order token that names no known order."""

    def __init__(self, token: str, valid: List[str]) -> None:
        super().__init__(
            f"unknown order {token!r}; valid orders: {', '.join(valid)}, meet:X+Y"
        )
        self.token = token
        self.valid = valid


@dataclass(frozen=True)
class LabelOrder:
    """
    A strict partial order over label sets.
    less(a, b) is the relation a < b. priority, when present, maps labels to
    natively comparable keys with a < b iff priority(a) > priority(b), so the
    smallest key is visited first (the order is then a strict weak order).
    extend_priority(k, d) is the priority of label + (d,) given k, the
    priority of label, for any date d above every date of label.
    """

    id: str
    less: Callable[[LabelSet, LabelSet], bool] = field(compare=False)
    priority: Optional[Callable[[LabelSet], Any]] = field(default=None, compare=False)
    extend_priority: Optional[Callable[[Any, int], Any]] = field(
        default=None, compare=False
    )

    def compare(self, a: LabelSet, b: LabelSet) -> Comparison:
        """Three-valued comparison of a against b."""
        if self.less(a, b):
            return Comparison.A_LESS_B
        if self.less(b, a):
            return Comparison.B_LESS_A
        return Comparison.INCOMPARABLE

    def __str__(self) -> str:
        return self.id
