"""Distinct-part partitions built by jumps that keep the initial term fixed.

A partition with unequal parts is written ``a1 a2 ... am`` where ``a1`` is
the largest part and the tail is increasing; read right to left, the tail
is the descending sequence of jump orders that produced it. Summing the
smallest part of every such partition of n, with a minus sign when the
number of parts is even, gives the number of divisors of n.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Tuple

from .config import DEFAULT_NODE_BUDGET
from .exceptions import InvalidInvariantJump
from .network import PartitionNetwork, check_budget


@dataclass(frozen=True)
class DistinctPartition:
    terms: Tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        tail = terms[1:]
        if not terms or any(t < 1 for t in terms) or any(x >= y for x, y in zip(tail, tail[1:])):
            raise ValueError(f"{terms} is not a distinct-part partition")
        if tail and tail[-1] >= terms[0]:
            raise ValueError(f"initial term {terms[0]} must exceed every other part in {terms}")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "DistinctPartition":
        ordered = sorted(parts)
        return cls((ordered[-1],) + tuple(ordered[:-1]))

    @property
    def a1(self) -> int:
        return self.terms[0]

    @property
    def tail(self) -> Tuple[int, ...]:
        return self.terms[1:]

    @property
    def n(self) -> int:
        return sum(self.terms)

    @property
    def smallest(self) -> int:
        return self.terms[1] if len(self.terms) > 1 else self.terms[0]

    @property
    def sign(self) -> int:
        return 1 if len(self.terms) % 2 else -1

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return " ".join(map(str, self.terms))


@dataclass(frozen=True)
class SignedTraceTerm:
    partition: DistinctPartition
    smallest: int
    sign: int

    @property
    def value(self) -> int:
        return self.sign * self.smallest


def invariant_jump(p: DistinctPartition, r: int) -> DistinctPartition:
    """Insert a new second term r, turning a partition of n into one of n + r."""
    if r < 1 or r >= p.smallest:
        raise InvalidInvariantJump(
            f"order {r} must satisfy 1 <= r < {p.smallest} to jump from {p}")
    return DistinctPartition((p.terms[0], r) + p.terms[1:])


def invariant_predecessor(p: DistinctPartition):
    """Undo the last invariant jump; None for a bare initial term."""
    if len(p.terms) == 1:
        return None
    return DistinctPartition(p.terms[:1] + p.terms[2:])


def enumerate_descending_jump_set(a1: int) -> Iterator[DistinctPartition]:
    """All 2**(a1-1) distinct-part partitions with largest part a1.

    Ordered by tail length, then lexicographically.
    """
    if a1 < 1:
        raise ValueError(f"a1 must be positive, got {a1}")
    pool = range(1, a1)
    for size in range(a1):
        for tail in combinations(pool, size):
            yield DistinctPartition((a1,) + tail)


def _tails(target: int, cap: int) -> Iterator[Tuple[int, ...]]:
    """Increasing tuples of distinct parts below ``cap`` that sum to ``target``."""
    stack = [(target, cap, ())]
    while stack:
        rem, top, tail = stack.pop()
        if rem == 0:
            yield tail
            continue
        for r in range(min(top - 1, rem), 0, -1):
            # parts below r can add up to at most r(r-1)/2
            if rem - r > r * (r - 1) // 2:
                break
            stack.append((rem - r, r, (r,) + tail))


def _distinct_terms(n: int) -> Iterator[Tuple[int, ...]]:
    for a1 in range(1, n + 1):
        for tail in _tails(n - a1, a1):
            yield (a1,) + tail


def signed_smallest(terms: Tuple[int, ...]) -> int:
    smallest = terms[1] if len(terms) > 1 else terms[0]
    return smallest if len(terms) % 2 else -smallest


def enumerate_distinct_partitions(n: int) -> Iterator[SignedTraceTerm]:
    """One signed term per partition of n into distinct parts.

    Partitions are grouped by initial term a1 = 1..n; the jump orders of
    each sum to ``n - a1``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for terms in _distinct_terms(n):
        part = DistinctPartition(terms)
        yield SignedTraceTerm(part, part.smallest, part.sign)


def trace(n: int) -> int:
    """Signed sum of smallest parts over distinct-part partitions of n; equals d(n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sum(map(signed_smallest, _distinct_terms(n)))


def _invariant_jump_network(kind: str, parameter: int,
                            partitions: Iterable[Tuple[int, ...]],
                            value: Callable[[Tuple[int, ...]], int],
                            node_budget: int) -> PartitionNetwork:
    # every partition must come after its predecessor in ``partitions``
    net = PartitionNetwork(kind=kind, parameter=parameter, values=[])
    ids = {}
    for terms in partitions:
        check_budget(f"{kind} network", len(net) + 1, node_budget)
        node = net.add_node(terms, value(terms))
        ids[terms] = node
        if len(terms) == 1:
            net.roots.append(node)
        else:
            parent = ids[terms[:1] + terms[2:]]
            net.add_edge(parent, node, terms[1], first_jump=len(terms) == 2)
    return net


def build_divisor_network(a1_max: int, node_budget: int = DEFAULT_NODE_BUDGET) -> PartitionNetwork:
    """Complete descending jump sets for a1 = 1..a1_max, valued by signed smallest term."""
    if a1_max < 1:
        raise ValueError(f"a1_max must be positive, got {a1_max}")
    check_budget(f"divisor network for a1_max={a1_max}", 2**a1_max - 1, node_budget)
    partitions = (p.terms for a1 in range(1, a1_max + 1)
                  for p in enumerate_descending_jump_set(a1))
    return _invariant_jump_network("divisor", a1_max, partitions, signed_smallest, node_budget)
