"""Interchangeable implementations of p(n), d(n) and sigma_1(n).

Functions are looked up on their modules at call time so a patched
module attribute is what ``verify`` exercises.
"""

from . import counting, divisors, enumeration, evector, oracles, sigma

P_METHODS = ("recursive", "pentagonal", "enumerate")
D_METHODS = ("trace", "evector", "oracle")
SIGMA_METHODS = ("trace", "oracle")


def partition_count(n: int, method: str = "recursive", memo=None) -> int:
    if method == "recursive":
        return counting.p(n, memo) if memo is not None else counting.p(n)
    if method == "pentagonal":
        return oracles.p_pentagonal(n)
    if method == "enumerate":
        if n == 0:
            return 1
        return sum(1 for _ in enumeration.enumerate_partitions(n))
    raise ValueError(f"unknown method {method!r}; choose from {P_METHODS}")


def divisor_count(n: int, method: str = "trace") -> int:
    if method == "trace":
        return divisors.trace(n)
    if method == "evector":
        return evector.divisors_from_evector(n)[-1]
    if method == "oracle":
        return oracles.divisor_stats_trial(n)[0]
    raise ValueError(f"unknown method {method!r}; choose from {D_METHODS}")


def divisor_sum(n: int, method: str = "trace") -> int:
    if method == "trace":
        return sigma.sigma1(n)
    if method == "oracle":
        return oracles.divisor_stats_trial(n)[1]
    raise ValueError(f"unknown method {method!r}; choose from {SIGMA_METHODS}")
