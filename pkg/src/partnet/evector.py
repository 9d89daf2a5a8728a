"""Divisor counts from the shift-matrix recurrence ``E_n = A(n, n-1) E_{n-1} + n I_n``.

``A(i, j)`` is the t(i) x t(j) matrix with -1 on the diagonal and +1 where
``row - i == col`` (1-based). It is never built: applying it costs two
slice operations. The last n entries of ``E_n`` hold d(n), d(n-1), ..., d(1).

Vectors are numpy arrays indexed from 0 in code; the docstrings use the
1-based positions of the matrix definition. Entries away from the final
block grow roughly like 1.2**n, so vectors start as int64 and are promoted
to Python integers (object dtype) before they could overflow.
"""

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .config import DEFAULT_EVECTOR_BUDGET
from .exceptions import DimensionMismatch
from .network import check_budget

# one recurrence step at most doubles the largest magnitude (plus n)
_INT64_SAFE = 2**61


def triangular(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return n * (n + 1) // 2


@dataclass(frozen=True)
class ShiftMatrixSpec:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"block indices must be positive, got ({self.i}, {self.j})")

    @property
    def shape(self):
        return triangular(self.i), triangular(self.j)

    def dense(self) -> np.ndarray:
        """Materialized matrix; only meant for tests and small sizes."""
        rows, cols = self.shape
        k = np.arange(1, rows + 1)[:, None]
        l = np.arange(1, cols + 1)[None, :]
        return (k - self.i == l).astype(np.int64) - (k == l).astype(np.int64)


@dataclass(frozen=True)
class EVector:
    n: int
    entries: np.ndarray

    def __len__(self):
        return len(self.entries)

    def entry(self, position: int) -> int:
        """1-based access, matching the matrix notation."""
        if not 1 <= position <= len(self.entries):
            raise IndexError(position)
        return int(self.entries[position - 1])

    def final_block(self) -> np.ndarray:
        return self.entries[triangular(self.n - 1):]

    def tolist(self) -> List[int]:
        return [int(x) for x in self.entries]


def apply_shift_matrix(spec: ShiftMatrixSpec, v: Sequence[int]) -> np.ndarray:
    """Return ``A(i, j) @ v`` without forming the matrix.

    Row k receives ``-v[k]`` when k <= t(j) and ``+v[k - i]`` when
    ``1 <= k - i <= t(j)``; both may hit the same row.
    """
    v = np.asarray(v)
    if v.dtype != object:
        v = v.astype(np.int64, copy=False)
    rows, cols = spec.shape
    if v.ndim != 1 or len(v) != cols:
        raise DimensionMismatch(
            f"A({spec.i},{spec.j}) needs a vector of length {cols}, got shape {v.shape}")
    w = np.zeros(rows, dtype=v.dtype)
    m = min(rows, cols)
    w[:m] -= v[:m]
    count = min(cols, rows - spec.i)
    if count > 0:
        w[spec.i:spec.i + count] += v[:count]
    return w


def _widen(w: np.ndarray) -> np.ndarray:
    if w.dtype != object and len(w) and int(np.abs(w).max()) >= _INT64_SAFE:
        return w.astype(object)
    return w


def e_vector(n: int, budget: int = DEFAULT_EVECTOR_BUDGET) -> EVector:
    """Iterate the recurrence from ``E_1 = [1]`` up to ``E_n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_budget(f"E-vector for n={n}", triangular(n), budget)
    current = np.ones(1, dtype=np.int64)
    for m in range(2, n + 1):
        current = apply_shift_matrix(ShiftMatrixSpec(m, m - 1), current)
        current[triangular(m - 1)] += m
        current = _widen(current)
    return EVector(n, current)


def e_vector_closed_form(n: int, budget: int = DEFAULT_EVECTOR_BUDGET) -> EVector:
    """Evaluate ``sum_m m * A(n,n-1) ... A(m+1,m) I_m`` term by term.

    Quadratically more work than ``e_vector``; used as a cross-check.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    check_budget(f"E-vector for n={n}", triangular(n), budget)
    total = np.zeros(triangular(n), dtype=np.int64)
    for m in range(1, n + 1):
        term = np.zeros(triangular(m), dtype=np.int64)
        term[triangular(m - 1)] = m
        for k in range(m + 1, n + 1):
            term = _widen(apply_shift_matrix(ShiftMatrixSpec(k, k - 1), term))
        if term.dtype == object:
            total = total.astype(object)
        total = _widen(total + term)
    return EVector(n, total)


def divisors_from_evector(n: int) -> List[int]:
    """``[d(1), ..., d(n)]`` read off the reversed final block of ``E_n``."""
    block = e_vector(n).final_block()
    return [int(x) for x in block[::-1]]
