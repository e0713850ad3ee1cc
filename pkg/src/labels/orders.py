"""The built-in label orders, the null order and the semilattice meet."""

from functools import reduce
from typing import Dict, List, Tuple

from .label_types import INFINITY, ExtendedDate, LabelOrder, LabelSet, UnknownOrderError
from .main import first_difference, is_strict_subset, last_difference, umax, umin

MEET_PREFIX = "meet:"
NULL_TOKEN = "null"

# Lex priorities end in INFINITY so that a proper prefix sorts after its extensions.
LexKey = Tuple[ExtendedDate, ...]


def _gen_less(a: LabelSet, b: LabelSet) -> bool:
    return not a and bool(b)


def _bfs_less(a: LabelSet, b: LabelSet) -> bool:
    return umin(a) > umin(b)


def _dfs_less(a: LabelSet, b: LabelSet) -> bool:
    return umax(a) < umax(b)


def _lbfs_less(a: LabelSet, b: LabelSet) -> bool:
    # umin(b - a) < umin(a - b)
    return first_difference(a, b) == 1


def _ldfs_less(a: LabelSet, b: LabelSet) -> bool:
    # umax(a - b) < umax(b - a)
    return last_difference(a, b) == 1


def _mcs_less(a: LabelSet, b: LabelSet) -> bool:
    return len(a) < len(b)


def _never(a: LabelSet, b: LabelSet) -> bool:  # pylint: disable=unused-argument
    return False


def _bfs_extend(key: ExtendedDate, date: int) -> ExtendedDate:
    return min(key, date)


def _dfs_priority(a: LabelSet) -> ExtendedDate:
    return -umax(a)


def _dfs_extend(_key: ExtendedDate, date: int) -> ExtendedDate:
    return -date


def _lbfs_priority(a: LabelSet) -> LexKey:
    return a + (INFINITY,)


def _lbfs_extend(key: LexKey, date: int) -> LexKey:
    return key[:-1] + (date, INFINITY)


def _ldfs_priority(a: LabelSet) -> LexKey:
    return tuple(-d for d in reversed(a)) + (INFINITY,)


def _ldfs_extend(key: LexKey, date: int) -> LexKey:
    return (-date,) + key


def _mcs_priority(a: LabelSet) -> int:
    return -len(a)


def _mcs_extend(key: int, _date: int) -> int:
    return key - 1


GEN = LabelOrder("gen", _gen_less)
BFS = LabelOrder("bfs", _bfs_less, umin, _bfs_extend)
DFS = LabelOrder("dfs", _dfs_less, _dfs_priority, _dfs_extend)
LBFS = LabelOrder("lbfs", _lbfs_less, _lbfs_priority, _lbfs_extend)
LDFS = LabelOrder("ldfs", _ldfs_less, _ldfs_priority, _ldfs_extend)
MCS = LabelOrder("mcs", _mcs_less, _mcs_priority, _mcs_extend)
MNS = LabelOrder("mns", is_strict_subset)
NULL_ORDER = LabelOrder(NULL_TOKEN, _never)

BUILTIN_ORDERS: Dict[str, LabelOrder] = {
    order.id: order for order in (GEN, BFS, DFS, LBFS, LDFS, MCS, MNS)
}


def meet(first: LabelOrder, second: LabelOrder) -> LabelOrder:
    """a < b under the meet iff a < b under both operands."""
    return LabelOrder(
        f"meet({first.id},{second.id})",
        lambda a, b: first.less(a, b) and second.less(a, b),
    )


def order_tokens() -> List[str]:
    """Every simple order token, in hierarchy order."""
    return list(BUILTIN_ORDERS) + [NULL_TOKEN]


def parse_order(token: str) -> LabelOrder:
    """
    Resolve an order token: a built-in name, "null", or "meet:X+Y[+Z...]".
    """
    token = token.strip()
    if token in BUILTIN_ORDERS:
        return BUILTIN_ORDERS[token]
    if token == NULL_TOKEN:
        return NULL_ORDER
    if token.startswith(MEET_PREFIX):
        operands = token[len(MEET_PREFIX) :].split("+")
        if len(operands) < 2 or not all(operands):
            raise UnknownOrderError(token, order_tokens())
        return reduce(meet, (parse_order(operand) for operand in operands))
    raise UnknownOrderError(token, order_tokens())
