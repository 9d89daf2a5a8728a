"""Sum of divisors as a signed sum over distinct-part partitions.

Each partition with largest part L and smallest part lam contributes
``(L - lam + 1) + ... + L``, negated when it has an even number of parts.
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

from .config import DEFAULT_NODE_BUDGET
from .divisors import DistinctPartition, _distinct_terms, _invariant_jump_network
from .network import PartitionNetwork, check_budget


def inner_sum(L: int, lam: int) -> int:
    """``sum(L - lam + j for j in 1..lam)`` in closed form."""
    if not 1 <= lam <= L:
        raise ValueError(f"need 1 <= lambda <= L, got L={L}, lambda={lam}")
    return lam * (L - lam) + lam * (lam + 1) // 2


def _weight(terms: Tuple[int, ...]) -> int:
    # terms[0] is the largest part, terms[1] (if any) the smallest
    lam = terms[1] if len(terms) > 1 else terms[0]
    w = inner_sum(terms[0], lam)
    return w if len(terms) % 2 else -w


@dataclass(frozen=True)
class SigmaTerm:
    partition: DistinctPartition
    L: int
    lam: int
    weight: int


def sigma_terms(n: int) -> Iterator[SigmaTerm]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for terms in _distinct_terms(n):
        part = DistinctPartition(terms)
        yield SigmaTerm(part, part.a1, part.smallest, _weight(terms))


def sigma1(n: int) -> int:
    """Sum of the divisors of n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(map(_weight, _distinct_terms(n)))


def build_sigma_network(n_max: int, node_budget: int = DEFAULT_NODE_BUDGET) -> PartitionNetwork:
    """Distinct-part partitions of 1..n_max weighted by their sigma contribution.

    Each node hangs off the partition obtained by dropping its second term;
    the single-part nodes ``[k]`` carry the triangular numbers t(k).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    # same construction order as the divisor network restricted to sums <= n_max
    partitions = []
    for total in range(1, n_max + 1):
        for terms in _distinct_terms(total):
            partitions.append(terms)
            check_budget(f"sigma network for n_max={n_max}", len(partitions), node_budget)
    partitions.sort(key=lambda t: (t[0], len(t), t[1:]))
    return _invariant_jump_network("sigma", n_max, partitions, _weight, node_budget)
