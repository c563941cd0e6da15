from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadnomial.modring import ModInt, rat_to_mod
from quadnomial.numtheory import (
    IndexTooLarge,
    NotCoprime,
    PrimeCase,
    QuarterSumSpec,
    TermDivisibleByP,
    fermat_quotient,
    fermat_quotient_lift,
    harmonic_mod,
    is_prime,
    pell,
    pell_mod,
    pell_quotient,
    pell_quotient_lift,
    primes_between,
    quarter_sum,
)
from quadnomial.oracle import exact_harmonic, exact_quarter_sum


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_is_prime_agrees_with_trial_division():
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if trial_division(n)]


@pytest.mark.parametrize("n,expected", [
    (2**31 - 1, True),
    (2**61 - 1, True),
    (18446744073709551557, True),  # largest prime below 2**64
    (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
    (3825123056546413051, False),  # strong pseudoprime to bases 2..23
    (561, False),
    (25326001, False),
])
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected


def test_primes_between():
    assert primes_between(5, 31) == [5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert primes_between(24, 28) == []
    assert len(primes_between(1, 10000)) == 1229


def test_prime_case():
    pc = PrimeCase(11)
    assert (pc.r4, pc.r8, pc.eps2, pc.p2) == (3, 3, -1, 121)
    assert PrimeCase(7).eps2 == 1 and PrimeCase(17).eps2 == 1 and PrimeCase(5).eps2 == -1
    for bad in (2, 3, 4, 9, 25):
        with pytest.raises(ValueError):
            PrimeCase(bad)


@pytest.mark.parametrize("p", primes_between(5, 3000))
def test_eps2_matches_euler_criterion(p):
    pc = PrimeCase(p)
    assert ModInt(pow(2, (p - 1) // 2, p), p) == ModInt(pc.eps2, p)


def test_fermat_quotient_examples():
    assert fermat_quotient(5, 2).value == 3
    assert fermat_quotient(7, 2).value == 2
    assert fermat_quotient(5, 3).value == 1
    with pytest.raises(NotCoprime):
        fermat_quotient(5, 10)


def test_fermat_quotient_lift_examples():
    assert fermat_quotient_lift(7, 2) == ModInt(9, 49)
    assert fermat_quotient_lift(11, 2) == ModInt(93, 121)
    assert fermat_quotient_lift(5, 1) == ModInt(0, 25)
    with pytest.raises(NotCoprime):
        fermat_quotient_lift(7, 14)


@pytest.mark.parametrize("p", primes_between(5, 200))
@pytest.mark.parametrize("a", [2, 3, 6])
def test_fermat_quotient_against_big_integers(p, a):
    exact = (a ** (p - 1) - 1) // p
    assert fermat_quotient(p, a).value == exact % p
    assert fermat_quotient_lift(p, a).value == exact % (p * p)


def test_pell_examples():
    assert pell(0) == 0
    assert [pell(i) for i in range(7)] == [0, 1, 2, 5, 12, 29, 70]
    assert pell(12) == 13860


@given(st.integers(0, 400), st.integers(1, 10**12))
def test_pell_mod_fast_doubling(n, m):
    assert pell_mod(n, m) == pell(n) % m


def test_pell_quotient_examples():
    assert pell_quotient(PrimeCase(5)).value == 4
    assert pell_quotient(PrimeCase(7)).value == 3
    assert pell_quotient(PrimeCase(11)).value == 6
    assert pell_quotient_lift(PrimeCase(5)).value == 14
    assert pell_quotient_lift(PrimeCase(11)).value == 50
    assert pell_quotient_lift(PrimeCase(7)).value == 10


@pytest.mark.parametrize("p", primes_between(5, 300))
def test_pell_quotient_against_exact_pell(p):
    pc = PrimeCase(p)
    big = pell(p - pc.eps2)
    assert big % p == 0
    assert pell_quotient(pc).value == big // p % p
    assert pell_quotient_lift(pc).value == big // p % (p * p)


def test_harmonic_examples():
    assert harmonic_mod(0, 5).value == 0
    assert harmonic_mod(2, 5).value == 4
    # H_3 = 11/6 and 11 * 6^-1 = 11 * 11 = 121 = 4 (mod 13)
    assert rat_to_mod(exact_harmonic(3), 13).value == 4
    assert harmonic_mod(3, 13).value == 4
    with pytest.raises(IndexTooLarge):
        harmonic_mod(5, 5)


@pytest.mark.parametrize("p", primes_between(2, 100))
def test_harmonic_equals_exact_rational(p):
    for m in range(p):
        assert harmonic_mod(m, p) == rat_to_mod(exact_harmonic(m), p)


def test_quarter_sum_examples():
    assert quarter_sum(QuarterSumSpec(1, 2, 13)).value == 12
    assert quarter_sum(QuarterSumSpec(2, -1, 13)).value == 0
    assert quarter_sum(QuarterSumSpec(3, 0, 7)).value == 5
    with pytest.raises(TermDivisibleByP):
        QuarterSumSpec(3, 1, 7)
    with pytest.raises(ValueError):
        QuarterSumSpec(4, 1, 7)


@pytest.mark.parametrize("p", primes_between(5, 100))
def test_quarter_sum_equals_exact_rational(p):
    for c in (1, 2, 3):
        for m in range(-1, p):
            if any((4 * k + c) % p == 0 for k in range(m + 1)):
                with pytest.raises(TermDivisibleByP):
                    QuarterSumSpec(c, m, p)
                continue
            assert quarter_sum(QuarterSumSpec(c, m, p)) == rat_to_mod(exact_quarter_sum(c, m), p)
