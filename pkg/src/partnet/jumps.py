"""Jumps of order r on integer partitions.

Partitions are kept in *jump form*: the largest term first, then the
remaining terms in non-descending order, e.g. ``4 1 2`` for 4 + 2 + 1.
A jump of order r splits the first term ``a`` into ``a - r`` and ``r``::

    >>> jump(Partition((15, 6)), 5)
    Partition(terms=(10, 5, 6))
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .exceptions import InvalidJump


def is_jump_form(terms: Tuple[int, ...]) -> bool:
    """True when ``a2, ..., am, a1`` is non-descending and every term is positive."""
    if not terms or any(t < 1 for t in terms):
        return False
    rotated = terms[1:] + terms[:1]
    return all(x <= y for x, y in zip(rotated, rotated[1:]))


@dataclass(frozen=True)
class Partition:
    terms: Tuple[int, ...]

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if not is_jump_form(terms):
            raise ValueError(f"{terms} is not a partition in jump form")

    @classmethod
    def from_multiset(cls, parts: Iterable[int]) -> "Partition":
        """Build the jump-form representation of an unordered collection of parts."""
        ordered = sorted(parts)
        if not ordered:
            raise ValueError("a partition needs at least one part")
        return cls((ordered[-1],) + tuple(ordered[:-1]))

    @property
    def n(self) -> int:
        return sum(self.terms)

    @property
    def first(self) -> int:
        return self.terms[0]

    @property
    def last(self) -> int:
        return self.terms[-1]

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        return " ".join(map(str, self.terms))

    def multiset(self) -> Tuple[int, ...]:
        """Parts in non-increasing order, the usual textbook presentation."""
        return tuple(sorted(self.terms, reverse=True))


def _jump_failure(p: Partition, r: int) -> Optional[str]:
    if r < 1:
        return f"order {r} is not positive"
    a1 = p.terms[0]
    # after the jump the last term is r itself when p has a single term
    last = p.terms[-1] if len(p.terms) > 1 else r
    if a1 - r < last:
        return f"first term {a1 - r} would be less than last term {last}"
    if len(p.terms) > 1 and r > p.terms[1]:
        return f"order {r} exceeds second term {p.terms[1]}"
    return None


def is_valid_jump(p: Partition, r: int) -> bool:
    return _jump_failure(p, r) is None


def jump(p: Partition, r: int) -> Partition:
    """Apply a jump of order r, raising InvalidJump if it is not allowed."""
    reason = _jump_failure(p, r)
    if reason is not None:
        raise InvalidJump(f"cannot jump {p} by order {r}: {reason}")
    a1 = p.terms[0]
    return Partition((a1 - r, r) + p.terms[1:])


def predecessor(p: Partition) -> Optional[Partition]:
    """The unique partition that ``p`` was reached from, or None for ``[n]``.

    The order of the last jump is the second term, so undoing it merges
    the first two terms.
    """
    if len(p.terms) == 1:
        return None
    return Partition((p.terms[0] + p.terms[1],) + p.terms[2:])


def jump_set_order1_size(p: Partition) -> int:
    """Number of partitions reachable by repeated order-1 jumps, ``p`` included.

    Equals ``a1 - am + 1``; a single-term partition counts as ``a1 = am``.
    """
    return p.terms[0] - p.terms[-1] + 1


def valid_orders(p: Partition) -> range:
    """All r with ``is_valid_jump(p, r)``, ascending."""
    a1 = p.terms[0]
    if len(p.terms) == 1:
        return range(1, a1 // 2 + 1)
    return range(1, min(p.terms[1], a1 - p.terms[-1]) + 1)
