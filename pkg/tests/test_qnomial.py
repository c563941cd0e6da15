from math import comb

import pytest

from quadnomial.modring import ModInt
from quadnomial.numtheory import IndexTooLarge, PrimeCase, primes_between
from quadnomial.qnomial import (
    Prop2Class,
    SideConditionViolated,
    binom_row_np_minus_1,
    block_sum_rhs,
    prop2_rhs,
    qnomial_exact,
    qnomial_mod_p2,
)


def test_exact_examples():
    assert qnomial_exact(4, 4) == 31
    assert all(qnomial_exact(n, 0) == 1 for n in range(20))
    assert qnomial_exact(2, 3) == 4
    assert qnomial_exact(4, 13) == 0
    assert qnomial_exact(4, -1) == 0
    assert qnomial_exact(6, 6, 49) == 42


@pytest.mark.parametrize("n", range(41))
def test_symmetry_and_row_sum(n):
    row = [qnomial_exact(n, k) for k in range(3 * n + 1)]
    assert row == row[::-1]
    assert sum(row) == 4**n


def test_binomial_row_examples():
    pc = PrimeCase(5)
    assert binom_row_np_minus_1(0, pc, 1) == ModInt(1, 25)
    assert binom_row_np_minus_1(1, pc, 1) == ModInt(4, 25)
    assert binom_row_np_minus_1(4, pc, 1) == ModInt(1, 25)
    with pytest.raises(IndexTooLarge):
        binom_row_np_minus_1(5, pc, 1)


@pytest.mark.parametrize("p", primes_between(5, 60))
def test_binomial_row_against_math_comb(p):
    pc = PrimeCase(p)
    for n in (1, 2, 4):
        for k in range(p):
            assert binom_row_np_minus_1(k, pc, n).value == comb(n * p - 1, k) % (p * p)


def test_fast_path_examples():
    assert qnomial_mod_p2(4, PrimeCase(5), 1) == ModInt(6, 25)
    assert qnomial_mod_p2(2, PrimeCase(5), 1) == ModInt(10, 25)
    assert qnomial_mod_p2(6, PrimeCase(7), 1) == ModInt(42, 49)
    with pytest.raises(IndexTooLarge):
        qnomial_mod_p2(7, PrimeCase(7), 1)


@pytest.mark.parametrize("p", primes_between(5, 37))
def test_fast_path_equals_exact_row(p):
    pc = PrimeCase(p)
    for n in (1, 2, 3):
        N = n * p - 1
        for k in range(p):
            # independent third route: (1+x^2)^N (1+x)^N with exact binomials
            direct = sum(comb(N, j) * comb(N, k - 2 * j) for j in range(k // 2 + 1))
            assert qnomial_exact(N, k) == direct
            assert qnomial_mod_p2(k, pc, n).value == direct % (p * p)


def test_prop2_examples():
    pc5, pc7 = PrimeCase(5), PrimeCase(7)
    assert prop2_rhs(Prop2Class(0, 1, pc5, 1)) == ModInt(6, 25)
    for p in (5, 7, 11, 13):
        for n in (1, 2, 5):
            assert prop2_rhs(Prop2Class(0, 0, PrimeCase(p), n)).value == 1
    assert prop2_rhs(Prop2Class(3, 0, pc7, 1)).value == qnomial_exact(6, 3) % 49 == 7


def test_prop2_side_conditions():
    pc = PrimeCase(7)
    with pytest.raises(SideConditionViolated):
        Prop2Class(0, 2, pc, 1)  # 8 > 6
    with pytest.raises(SideConditionViolated):
        Prop2Class(2, 2, pc, 1)
    # residue 3 only needs 4k+2 <= p-1, so k = 7 = p is admitted for p = 7
    assert Prop2Class(3, 1, pc, 1).k == 7
    with pytest.raises(SideConditionViolated):
        Prop2Class(3, 1, PrimeCase(5), 1)


@pytest.mark.parametrize("p", primes_between(5, 60))
def test_prop2_closed_forms_equal_fast_path(p):
    pc = PrimeCase(p)
    for n in range(1, 6):
        for k in range(p):
            assert prop2_rhs(Prop2Class.of(k, pc, n)) == qnomial_mod_p2(k, pc, n)


@pytest.mark.parametrize("p", [7, 11, 19, 23, 31, 43])
def test_prop2_printed_edge_column(p):
    pc = PrimeCase(p)
    for n in (1, 2, 3):
        cls = Prop2Class.of(p, pc, n)
        assert prop2_rhs(cls).value == qnomial_exact(n * p - 1, p, p * p)


def test_block_sum_examples():
    pc5 = PrimeCase(5)
    # inv(3) mod 25 = 17 and 5 * 17 = 85 = 10; row 4 gives 1 + 4 + 10 + 20 = 35 = 10
    assert block_sum_rhs(0, pc5, 1) == ModInt(10, 25)
    assert sum(qnomial_exact(4, k) for k in range(4)) % 25 == 10
    assert block_sum_rhs(0, PrimeCase(7), 0).value == 0
    pc13 = PrimeCase(13)
    assert block_sum_rhs(1, pc13, 2).value == sum(qnomial_exact(25, k) for k in range(4, 8)) % 169
    with pytest.raises(ValueError):
        block_sum_rhs(4, pc5, 1)


@pytest.mark.parametrize("p", primes_between(5, 60))
def test_block_sum_property(p):
    pc = PrimeCase(p)
    for n in (1, 2, 3):
        k4 = 0
        while 4 * k4 + 3 <= p - 1:
            s = sum(qnomial_mod_p2(4 * k4 + i, pc, n).value for i in range(4)) % (p * p)
            assert s == block_sum_rhs(k4, pc, n).value
            k4 += 1


def test_block_sum_fails_past_printed_range_for_p_1_mod_4():
    # k4 = [p/4] reaches past the column range where the identity is stated
    pc = PrimeCase(13)
    k4 = 13 // 4
    s = sum(qnomial_exact(12, 4 * k4 + i) for i in range(4)) % 169
    assert s != block_sum_rhs(k4, pc, 1).value
