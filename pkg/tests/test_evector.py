import numpy as np
import pytest
from hypothesis import given, strategies as st

from partnet.evector import (
    EVector,
    ShiftMatrixSpec,
    apply_shift_matrix,
    divisors_from_evector,
    e_vector,
    e_vector_closed_form,
    triangular,
)
from partnet.exceptions import DimensionMismatch, LimitExceeded
from partnet.oracles import d_trial

PRINTED = {
    1: [1],
    2: [-1, 2, 1],
    3: [1, -2, -1, 2, 2, 1],
    4: [-1, 2, 1, -2, -1, -3, 3, 2, 2, 1],
    5: [1, -2, -1, 2, 1, 2, -1, -1, -4, -2, 2, 3, 2, 2, 1],
}


def dense_from_definition(i, j):
    rows, cols = triangular(i), triangular(j)
    out = [[0] * cols for _ in range(rows)]
    for k in range(1, rows + 1):
        for l in range(1, cols + 1):
            if k == l:
                out[k - 1][l - 1] = -1
            elif k - i == l:
                out[k - 1][l - 1] = 1
    return out


def matvec(m, v):
    return [sum(a * b for a, b in zip(row, v)) for row in m]


@pytest.mark.parametrize("n, expected", [(0, 0), (4, 10), (5, 15), (1000, 500500)])
def test_triangular(n, expected):
    assert triangular(n) == expected


def test_shift_examples():
    assert apply_shift_matrix(ShiftMatrixSpec(2, 1), [1]).tolist() == [-1, 0, 1]
    assert apply_shift_matrix(ShiftMatrixSpec(3, 2), [-1, 2, 1]).tolist() == [1, -2, -1, -1, 2, 1]


@given(st.integers(1, 7), st.integers(1, 7), st.data())
def test_shift_matches_dense_definition(i, j, data):
    v = data.draw(st.lists(st.integers(-1000, 1000), min_size=triangular(j),
                           max_size=triangular(j)))
    expected = matvec(dense_from_definition(i, j), v)
    assert apply_shift_matrix(ShiftMatrixSpec(i, j), v).tolist() == expected
    assert (ShiftMatrixSpec(i, j).dense() @ np.array(v, dtype=np.int64)).tolist() == expected


@given(st.integers(1, 8), st.integers(1, 8))
def test_shift_of_zero_is_zero(i, j):
    w = apply_shift_matrix(ShiftMatrixSpec(i, j), [0] * triangular(j))
    assert len(w) == triangular(i) and not w.any()


def test_shift_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply_shift_matrix(ShiftMatrixSpec(3, 2), [1, 2])


@pytest.mark.parametrize("n", sorted(PRINTED))
def test_printed_vectors(n):
    assert e_vector(n).tolist() == PRINTED[n]
    assert e_vector_closed_form(n).tolist() == PRINTED[n]


def test_recurrence_injects_only_at_block_start():
    for n in range(2, 30):
        prev = e_vector(n - 1).entries
        shifted = apply_shift_matrix(ShiftMatrixSpec(n, n - 1), prev)
        cur = e_vector(n).entries
        diff = (cur - shifted).tolist()
        assert diff[triangular(n - 1)] == n
        assert all(x == 0 for k, x in enumerate(diff) if k != triangular(n - 1))
        assert cur[-1] == 1


def test_closed_form_matches_recurrence():
    for n in range(1, 41):
        assert e_vector(n).tolist() == e_vector_closed_form(n).tolist()


def reference_e_vector(n):
    """Plain-list recurrence on Python ints, straight from the matrix entries."""
    vec = [1]
    for m in range(2, n + 1):
        rows, cols = triangular(m), len(vec)
        out = [0] * rows
        for k in range(1, rows + 1):
            if k <= cols:
                out[k - 1] -= vec[k - 1]
            if 1 <= k - m <= cols:
                out[k - 1] += vec[k - m - 1]
        out[triangular(m - 1)] += m
        vec = out
    return vec


def test_large_entries_stay_exact():
    # magnitudes pass 2**63 around n = 230; entries must not wrap
    big = e_vector(300)
    assert big.entries.dtype == object
    assert max(abs(x) for x in big.tolist()) > 2**63
    assert big.tolist() == reference_e_vector(300)


def test_closed_form_past_int64_promotion():
    n = 224
    assert e_vector(n).entries.dtype == object
    assert e_vector_closed_form(n).tolist() == e_vector(n).tolist()


def test_final_block_holds_reversed_divisor_counts():
    for n in range(1, 60):
        vec = e_vector(n)
        assert len(vec) == triangular(n)
        block = [vec.entry(triangular(n - 1) + j) for j in range(1, n + 1)]
        assert block == [d_trial(n + 1 - j) for j in range(1, n + 1)]


@pytest.mark.parametrize("n, expected", [(1, [1]), (4, [1, 2, 2, 3]), (5, [1, 2, 2, 3, 2])])
def test_divisors_from_evector(n, expected):
    assert divisors_from_evector(n) == expected


def test_divisors_from_evector_300():
    assert divisors_from_evector(300) == [d_trial(k) for k in range(1, 301)]


def test_budget():
    with pytest.raises(LimitExceeded):
        e_vector(100, budget=1000)


def test_entry_is_one_based():
    vec = EVector(2, np.array([-1, 2, 1]))
    assert vec.entry(1) == -1 and vec.entry(3) == 1
    with pytest.raises(IndexError):
        vec.entry(0)
