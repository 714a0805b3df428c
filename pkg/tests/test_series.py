import json

import pytest
from hypothesis import given, settings, strategies as st

from leastgap.figurate import gen_pentagonal, pentagonal_sign
from leastgap.series import (
    MOD32_SPECS,
    FormalPowerSeries,
    euler_product,
    fps_add,
    fps_inverse,
    fps_mul,
    fps_sub,
    gen_L,
    gen_S_r,
    gen_U_r,
    multi_product,
    partition_series,
    theta_square,
    theta_triangular,
)


def naive_product(exponents, N, sign=-1):
    """Multiply out prod (1 + sign*q^e) as plain lists, one factor at a time."""
    acc = [1] + [0] * N
    for e in exponents:
        factor = [0] * (N + 1)
        factor[0] = 1
        if e <= N:
            factor[e] += sign
        acc = [sum(acc[i] * factor[k - i] for i in range(k + 1)) for k in range(N + 1)]
    return acc


def fps(coeffs, N):
    return FormalPowerSeries(coeffs, N)


def test_difference_of_squares():
    assert fps([1, 1], 4) * fps([1, -1], 4) == fps([1, 0, -1], 4)


def test_mismatched_orders_rejected():
    with pytest.raises(ValueError):
        fps([1], 3) + fps([1], 4)
    with pytest.raises(ValueError):
        fps_mul(fps([1], 3), fps([1], 2))


def test_p10_from_reciprocal():
    assert partition_series(10)[10] == 42


def test_geometric_inverse():
    assert fps_inverse(fps([1, -1], 3)) == fps([1, 1, 1, 1], 3)


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        fps_inverse(fps([2, 1], 3))
    assert fps_inverse(fps([-1, 1], 4)) * fps([-1, 1], 4) == FormalPowerSeries.one(4)


def test_index_beyond_order():
    with pytest.raises(IndexError):
        fps([1], 3)[4]


def test_pentagonal_number_theorem():
    N = 200
    e = euler_product(1, 1, N)
    expected = [0] * (N + 1)
    k = 0
    while gen_pentagonal(k) <= N:
        expected[gen_pentagonal(k)] = pentagonal_sign(k)
        k += 1
    assert list(e.coeffs) == expected


def test_euler_product_small():
    assert euler_product(2, 4, 8) == fps([1, 0, -1, 0, 0, 0, -1, 0, 1], 8)
    assert euler_product(9, 3, 8) == FormalPowerSeries.one(8)
    with pytest.raises(ValueError):
        euler_product(0, 1, 5)


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (3, 4), (5, 2)])
@pytest.mark.parametrize("sign", [-1, 1])
def test_euler_product_against_naive(a, b, sign):
    N = 30
    exps = range(a, N + 1, b)
    assert list(euler_product(a, b, N, sign=sign).coeffs) == naive_product(exps, N, sign)


def test_multi_product_examples():
    assert multi_product([], 5) == FormalPowerSeries.one(5)
    N = 32
    exps = [a + k * b for a, b in MOD32_SPECS for k in range(N) if a + k * b <= N]
    assert list(multi_product(MOD32_SPECS, N).coeffs) == naive_product(exps, N)
    exps = [e for a in (1, 3, 4) for e in range(a, 13, 4)]
    assert list(multi_product([(1, 4), (3, 4), (4, 4)], 12).coeffs) == naive_product(exps, 12)


def test_theta_triangular():
    assert theta_triangular(-1, 10) == fps([1, -1, 0, -1, 0, 0, 1, 0, 0, 0, 1], 10)
    assert theta_triangular(1, 6) == fps([1, 1, 0, 1, 0, 0, 1], 6)
    s = theta_triangular(-1, 100)
    tri = {k * (k + 1) // 2 for k in range(15)}
    assert all(s[i] == 0 for i in range(101) if i not in tri)


def test_theta_square():
    assert theta_square(5) == fps([1, -2, 0, 0, 2, 0], 5)
    assert theta_square(0) == FormalPowerSeries.one(0)
    N = 60
    assert theta_square(N) == euler_product(1, 1, N) * fps_inverse(euler_product(1, 1, N, sign=1))


def test_eq2_product_equals_theta():
    N = 200
    lhs = euler_product(1, 1, N) * fps_inverse(euler_product(2, 4, N))
    assert lhs == theta_triangular(-1, N)


def test_gen_S_r_golden():
    assert gen_S_r(1, 8)[5] == 14
    assert gen_S_r(4, 8)[5] == 8
    assert gen_S_r(3, 0)[0] == 1


def test_gen_U_r_values():
    # brute-force counts (frozen)
    assert list(gen_U_r(1, 12).coeffs) == [1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 4]
    assert list(gen_U_r(2, 20).coeffs) == [
        1, 1, 1, 2, 3, 4, 5, 7, 9, 12, 15, 19, 25, 31, 38, 48, 59, 72, 88, 107, 130]


def test_gen_L_values():
    assert list(gen_L(20).coeffs) == [
        1, 1, 1, 2, 3, 4, 6, 8, 11, 15, 20, 26, 34, 44, 56, 72, 91, 114, 143, 178, 220]


def test_str_and_json():
    s = fps([1, -1, 0, 3, -2], 4)
    assert str(s) == "1 - q + 3*q^3 - 2*q^4"
    assert str(FormalPowerSeries([0, 0], 1)) == "0"
    assert json.loads(s.to_json()) == ["1", "-1", "0", "3", "-2"]
    assert FormalPowerSeries.from_json(s.to_json()) == s


series_st = st.integers(min_value=0, max_value=64).flatmap(
    lambda N: st.lists(st.integers(-10**6, 10**6), min_size=N + 1, max_size=N + 1)
)


@settings(max_examples=40, deadline=None)
@given(series_st, st.data())
def test_ring_laws(a_coeffs, data):
    N = len(a_coeffs) - 1
    coeff = st.lists(st.integers(-10**6, 10**6), min_size=N + 1, max_size=N + 1)
    a = FormalPowerSeries(a_coeffs)
    b = FormalPowerSeries(data.draw(coeff))
    c = FormalPowerSeries(data.draw(coeff))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * fps_add(b, c) == a * b + a * c
    assert fps_sub(fps_add(a, b), b) == a
    assert a * FormalPowerSeries.one(N) == a


@settings(max_examples=40, deadline=None)
@given(series_st, st.sampled_from([1, -1]))
def test_inverse_is_involution(coeffs, c0):
    coeffs[0] = c0
    a = FormalPowerSeries(coeffs)
    inv = fps_inverse(a)
    assert a * inv == FormalPowerSeries.one(a.order)
    assert fps_inverse(inv) == a


@pytest.mark.parametrize("builder", [
    lambda N: partition_series(N),
    lambda N: gen_S_r(2, N),
    lambda N: gen_U_r(3, N),
    lambda N: multi_product(MOD32_SPECS, N),
])
def test_truncation_coherence(builder):
    big = builder(80)
    for M in (0, 1, 17, 40, 80):
        assert big.truncate(M) == builder(M)
