"""Exact partition counts from the sizes of order-1 jump sets.

``script_p(s, t)`` counts the partitions reachable after a jump of order s
that lands on a partition whose order-1 jump set has t elements: the chain
of further order-s jumps visits sets of size t, t - s, t - 2s, ... and each
of those continues with orders below s.
"""

from typing import Optional


class CountTable(dict):
    """Memo of ``(s, t) -> script_p(s, t)``.

    Not locked; share one table per thread.
    """


def _dependencies(s, t):
    upper = (t + s - 1) // s
    return [(s - 1, t - s * (i - 1)) for i in range(1, upper + 1)]


def script_p(s: int, t: int, memo: Optional[CountTable] = None) -> int:
    """Evaluate the count recursion at ``(s, t)``, filling ``memo`` on the way.

    >>> script_p(2, 4)
    6
    """
    if s < 0 or t < 1:
        raise ValueError(f"script_p needs s >= 0 and t >= 1, got ({s}, {t})")
    if memo is None:
        memo = CountTable()
    key = (s, t)
    if key in memo:
        return memo[key]
    stack = [key]
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        cs, ct = cur
        if cs == 0:
            memo[cur] = 1
            stack.pop()
            continue
        deps = _dependencies(cs, ct)
        missing = [d for d in deps if d not in memo]
        if missing:
            stack.extend(missing)
            continue
        memo[cur] = sum(memo[d] for d in deps)
        stack.pop()
    return memo[key]


def p(n: int, memo: Optional[CountTable] = None) -> int:
    """Number of partitions of n; ``p(0) == 1``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return 1
    if memo is None:
        memo = CountTable()
    return sum(script_p(i, n + 1 - 2 * i, memo) for i in range(n // 2 + 1))
