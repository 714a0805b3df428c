import pytest
from hypothesis import given, strategies as st

from leastgap.partitions import (
    Partition,
    crank,
    enumerate_partitions,
    gap_drops,
    least_r_gap,
    rank,
    statistics,
)

P5 = [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]

# rows g_1..g_6, columns in the order of P5
TABLE_1 = [
    [1, 2, 1, 2, 3, 3, 2],
    [1, 1, 1, 2, 1, 2, 2],
    [1, 1, 1, 1, 1, 2, 2],
    [1, 1, 1, 1, 1, 1, 2],
    [1, 1, 1, 1, 1, 1, 2],
    [1, 1, 1, 1, 1, 1, 1],
]


def test_enumerate_zero():
    assert [lam.parts for lam in enumerate_partitions(0)] == [()]


def test_enumerate_five_order():
    assert [lam.parts for lam in enumerate_partitions(5)] == P5


def test_enumerate_eight_length():
    assert sum(1 for _ in enumerate_partitions(8)) == 22


@pytest.mark.parametrize("n", range(0, 16))
def test_enumerate_is_strictly_decreasing_and_valid(n):
    seen = [lam.parts for lam in enumerate_partitions(n)]
    assert seen == sorted(set(seen), reverse=True)
    for parts in seen:
        Partition(parts)
        assert sum(parts) == n


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    assert Partition([3, 1]).n == 4
    assert str(Partition(())) == "()"


def test_table_1_grid():
    grid = [[least_r_gap(Partition(lam), r) for lam in P5] for r in range(1, 7)]
    assert grid == TABLE_1


def test_least_r_gap_rejects_zero():
    with pytest.raises(ValueError):
        least_r_gap(Partition((1,)), 0)


def test_empty_partition_gap_is_one():
    assert least_r_gap(Partition(()), 1) == 1
    assert least_r_gap(Partition(()), 5) == 1


@pytest.mark.parametrize("parts, expected", [((4, 1), 2), ((), 0), ((3, 1, 1), 0)])
def test_rank(parts, expected):
    assert rank(Partition(parts)) == expected


@pytest.mark.parametrize("parts, expected", [((3, 2), 3), ((4, 1), 0), ((2, 1, 1, 1), -3), ((), 0)])
def test_crank(parts, expected):
    assert crank(Partition(parts)) == expected


def test_ranks_and_cranks_of_five():
    lams = list(enumerate_partitions(5))
    assert [rank(lam) for lam in lams] == [4, 2, 1, 0, -1, -2, -4]
    assert [crank(lam) for lam in lams] == [5, 0, 3, -1, 1, -3, -5]


def test_g1_drop_is_unconditional():
    assert all(gap_drops(lam, 1) for lam in enumerate_partitions(6))


partitions_st = st.lists(st.integers(min_value=1, max_value=8), max_size=14).map(
    lambda xs: Partition(tuple(sorted(xs, reverse=True)))
)


@given(partitions_st, st.integers(min_value=2, max_value=10))
def test_gap_monotone_in_r(lam, r):
    assert least_r_gap(lam, r) <= least_r_gap(lam, r - 1)


@given(partitions_st, st.integers(min_value=1, max_value=10))
def test_gap_at_most_largest_plus_one(lam, r):
    largest = lam.parts[0] if lam.parts else 0
    assert least_r_gap(lam, r) <= largest + 1


@given(partitions_st)
def test_gap_is_one_for_large_r(lam):
    assert least_r_gap(lam, lam.n + 2) == 1
    assert not gap_drops(lam, lam.n + 2)


@given(partitions_st)
def test_statistics_agree_with_single_functions(lam):
    st_ = statistics(lam, rs=range(1, 5))
    assert st_.rank == rank(lam)
    assert st_.crank == crank(lam)
    assert st_.omega == lam.parts.count(1)
    assert st_.least_r_gap == {r: least_r_gap(lam, r) for r in range(1, 5)}
    assert st_.length == len(lam)
