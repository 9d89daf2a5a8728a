import pytest
from hypothesis import given, strategies as st

from partnet.exceptions import InvalidJump
from partnet.jumps import (
    Partition,
    is_jump_form,
    is_valid_jump,
    jump,
    jump_set_order1_size,
    predecessor,
    valid_orders,
)

P = Partition

partitions = st.lists(st.integers(1, 40), min_size=1, max_size=12).map(Partition.from_multiset)


@pytest.mark.parametrize("terms, r, expected", [
    ((10, 4), 3, True),
    ((7,), 4, False),
    ((3, 1, 1, 2), 2, False),
    ((7,), 3, True),
    ((8, 5), 1, True),
    ((5, 5), 1, False),
])
def test_is_valid_jump(terms, r, expected):
    assert is_valid_jump(P(terms), r) is expected


@pytest.mark.parametrize("terms, r, expected", [
    ((15, 6), 5, (10, 5, 6)),
    ((5, 1, 3), 1, (4, 1, 1, 3)),
    ((7,), 1, (6, 1)),
    ((10, 4), 3, (7, 3, 4)),
    ((8, 5), 1, (7, 1, 5)),
    ((7,), 2, (5, 2)),
])
def test_jump(terms, r, expected):
    assert jump(P(terms), r) == P(expected)


def test_invalid_jump_names_condition():
    with pytest.raises(InvalidJump, match="less than last term"):
        jump(P((7,)), 4)
    with pytest.raises(InvalidJump, match="exceeds second term"):
        jump(P((10, 1, 4)), 3)
    with pytest.raises(InvalidJump, match="not positive"):
        jump(P((7,)), 0)


@pytest.mark.parametrize("terms, expected", [
    ((4, 1, 1, 3), (5, 1, 3)),
    ((5, 2), (7,)),
    ((9,), None),
])
def test_predecessor(terms, expected):
    result = predecessor(P(terms))
    assert result == (P(expected) if expected else None)


@pytest.mark.parametrize("terms, expected", [((10, 4), 7), ((9,), 1), ((5, 2), 4), ((1,), 1)])
def test_jump_set_order1_size(terms, expected):
    assert jump_set_order1_size(P(terms)) == expected


def test_jump_set_of_ten_four_by_walking():
    chain = [P((10, 4))]
    while is_valid_jump(chain[-1], 1):
        chain.append(jump(chain[-1], 1))
    assert str(chain[-1]) == "4 1 1 1 1 1 1 4"
    assert len(chain) == 7


def test_from_multiset_rotates_largest_to_front():
    assert Partition.from_multiset([1, 2, 4, 1]) == P((4, 1, 1, 2))
    assert Partition.from_multiset([3]).terms == (3,)


@pytest.mark.parametrize("terms", [(1, 2), (3, 2, 1), (0,), (), (2, -1)])
def test_rejects_non_jump_form(terms):
    with pytest.raises(ValueError):
        P(terms)


@given(partitions)
def test_from_multiset_is_canonical(p):
    assert is_jump_form(p.terms)


@given(partitions, st.integers(1, 40))
def test_jump_round_trip_and_sum(p, r):
    if not is_valid_jump(p, r):
        return
    q = jump(p, r)
    assert q.n == p.n
    assert is_jump_form(q.terms)
    assert predecessor(q) == p


@given(partitions.filter(lambda p: len(p) >= 2), st.integers(1, 40))
def test_jump_set_shrinks_by_order(p, r):
    if is_valid_jump(p, r):
        assert jump_set_order1_size(jump(p, r)) == jump_set_order1_size(p) - r


@given(st.integers(1, 200), st.integers(1, 200))
def test_single_term_validity(n, r):
    assert is_valid_jump(P((n,)), r) == (r <= n // 2)


@given(partitions)
def test_valid_orders_agree_with_predicate(p):
    assert list(valid_orders(p)) == [r for r in range(1, p.first + 1) if is_valid_jump(p, r)]
