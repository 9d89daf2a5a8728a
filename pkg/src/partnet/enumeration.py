"""Every partition of n, produced by non-ascending sequences of jumps from ``[n]``."""

from typing import Iterator, Optional, Tuple

from .config import DEFAULT_NODE_BUDGET
from .counting import p as count_partitions
from .jumps import Partition
from .network import PartitionNetwork, check_budget


def _walk(n: int) -> Iterator[Tuple[Tuple[int, ...], Optional[int], int]]:
    """Depth-first walk yielding ``(terms, parent_index, order)``.

    parent_index refers to the position of the parent in the yield
    sequence (None for the root). First jumps from ``[n]`` are explored in
    increasing order; later jumps from the previous order down to 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    root = Partition((n,))
    # stack holds (terms, parent_index, order); pushed in reverse of visit order
    stack = [(root.terms, None, 0)]
    index = 0
    while stack:
        terms, parent, order = stack.pop()
        yield terms, parent, order
        here = index
        index += 1
        a1 = terms[0]
        if len(terms) == 1:
            for r in range(a1 // 2, 0, -1):
                stack.append(((a1 - r, r), here, r))
        else:
            top = min(terms[1], a1 - terms[-1])
            rest = terms[1:]
            for r in range(1, top + 1):
                stack.append(((a1 - r, r) + rest, here, r))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield each partition of n exactly once, in a fixed depth-first order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3 1', '2 1 1', '1 1 1 1', '2 2']
    """
    for terms, _, _ in _walk(n):
        yield Partition(terms)


def build_partition_network(n: int, annotate: bool = False,
                            node_budget: int = DEFAULT_NODE_BUDGET) -> PartitionNetwork:
    """Materialize the jump tree of n.

    With ``annotate`` each node carries the size of its order-1 jump set;
    the children of ``[n]`` then read ``n + 1 - 2r``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_budget(f"partition network for n={n}", count_partitions(n), node_budget)
    net = PartitionNetwork(
        kind="partition-annotated" if annotate else "partition",
        parameter=n,
        values=[] if annotate else None,
    )
    for terms, parent, order in _walk(n):
        value = terms[0] - terms[-1] + 1 if annotate else None
        node = net.add_node(terms, value)
        if parent is None:
            net.roots.append(node)
        else:
            net.add_edge(parent, node, order, first_jump=parent == net.roots[0])
    return net

