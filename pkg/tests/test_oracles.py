import pytest

from partnet.oracles import (
    d_trial,
    distinct_partitions_bruteforce,
    divisor_stats_trial,
    p_pentagonal,
    partitions_bruteforce,
    sigma_trial,
)

PARTITIONS_OF_7 = [
    (7,), (6, 1), (5, 1, 1), (4, 1, 1, 1), (3, 1, 1, 1, 1), (2, 1, 1, 1, 1, 1),
    (1,) * 7, (5, 2), (4, 1, 2), (3, 1, 1, 2), (2, 1, 1, 1, 2), (3, 2, 2),
    (2, 1, 2, 2), (4, 3), (3, 1, 3),
]


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (7, 15), (15, 176)])
def test_p_pentagonal_values(n, expected):
    assert p_pentagonal(n) == expected


def test_p_pentagonal_matches_bruteforce():
    for n in range(1, 31):
        assert p_pentagonal(n) == len(partitions_bruteforce(n))


def test_partitions_bruteforce_small():
    assert partitions_bruteforce(1) == {(1,)}
    assert partitions_bruteforce(4) == {(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


def test_partitions_of_seven_match_listing():
    listed = {tuple(sorted(p, reverse=True)) for p in PARTITIONS_OF_7}
    assert len(listed) == 15
    assert partitions_bruteforce(7) == listed


@pytest.mark.parametrize("n, expected", [(1, (1, 1)), (6, (4, 12)), (12, (6, 28)),
                                         (7, (2, 8)), (36, (9, 91))])
def test_divisor_stats(n, expected):
    assert divisor_stats_trial(n) == expected


def test_divisor_stats_against_definition():
    for n in range(1, 200):
        divs = [k for k in range(1, n + 1) if n % k == 0]
        assert (d_trial(n), sigma_trial(n)) == (len(divs), sum(divs))


def test_distinct_partitions_bruteforce():
    assert distinct_partitions_bruteforce(1) == {frozenset({1})}
    seven = distinct_partitions_bruteforce(7)
    assert seven == {frozenset(s) for s in ({1, 2, 4}, {1, 6}, {2, 5}, {3, 4}, {7})}
    assert len(distinct_partitions_bruteforce(10)) == 10


def test_oracles_reject_bad_input():
    with pytest.raises(ValueError):
        p_pentagonal(-1)
    with pytest.raises(ValueError):
        divisor_stats_trial(0)
