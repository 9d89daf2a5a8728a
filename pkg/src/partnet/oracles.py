"""Classical reference implementations used for differential testing.

Nothing here imports from the jump-based modules; each function is a
textbook algorithm with its own failure modes.
"""

from math import isqrt


def p_pentagonal(n: int) -> int:
    """Number of partitions of n via Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    table = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            g2 = k * (3 * k + 1) // 2
            term = table[m - g1]
            if g2 <= m:
                term += table[m - g2]
            total += term if k % 2 else -term
            k += 1
        table[m] = total
    return table[n]


def partitions_bruteforce(n: int) -> set:
    """All partitions of n as non-increasing tuples."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = set()

    def descend(remaining, cap, prefix):
        if remaining == 0:
            out.add(tuple(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(n, n, [])
    return out


def divisor_stats_trial(n: int) -> tuple:
    """Return ``(d(n), sigma_1(n))`` by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    count = 0
    total = 0
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            other = n // k
            count += 1
            total += k
            if other != k:
                count += 1
                total += other
    return count, total


def d_trial(n: int) -> int:
    return divisor_stats_trial(n)[0]


def sigma_trial(n: int) -> int:
    return divisor_stats_trial(n)[1]


def distinct_partitions_bruteforce(n: int) -> set:
    """All sets of distinct positive integers summing to n, as frozensets."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = set()

    def search(remaining, smallest_allowed, chosen):
        if remaining == 0:
            out.add(frozenset(chosen))
            return
        for part in range(smallest_allowed, remaining + 1):
            chosen.append(part)
            search(remaining - part, part + 1, chosen)
            chosen.pop()

    search(n, 1, [])
    return out
