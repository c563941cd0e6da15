import pytest

from quadnomial.lemmas import check_lemma1, check_lemma2, check_lemma3
from quadnomial.numtheory import PrimeCase, primes_between


def by_id(verdicts):
    return {v.claim_id: v for v in verdicts}


def test_lemma1_examples():
    v = by_id(check_lemma1(PrimeCase(5)))
    assert v["LEMMA1_EQ6"].lhs.value == 4 and v["LEMMA1_EQ6"].rhs.value == 4
    assert v["LEMMA1_EQ8"].lhs.value == 0 and v["LEMMA1_EQ8"].rhs.value == 0
    v = by_id(check_lemma1(PrimeCase(7)))
    assert v["LEMMA1_EQ7"].lhs.value == 1 and v["LEMMA1_EQ7"].holds


def test_lemma2_examples():
    v = by_id(check_lemma2(PrimeCase(13)))
    assert v["LEMMA2_R4_1_C1"].lhs.value == 12 and v["LEMMA2_R4_1_C1"].rhs.value == 12
    v = by_id(check_lemma2(PrimeCase(7)))
    assert v["LEMMA2_R4_3_C3"].lhs.value == 5 and v["LEMMA2_R4_3_C3"].rhs.value == 5
    # 1/2 + 1/6 = 3 + 1 and 1 - 4*3 = -11, both 4 mod 5
    v = by_id(check_lemma2(PrimeCase(5)))
    assert v["LEMMA2_R4_1_C2"].lhs.value == 4 and v["LEMMA2_R4_1_C2"].rhs.value == 4


def test_lemma3_examples():
    v = by_id(check_lemma3(PrimeCase(11)))
    assert v["LEMMA3_R8_3_C1"].lhs.value == 10 and v["LEMMA3_R8_3_C1"].rhs.value == 10
    v = by_id(check_lemma3(PrimeCase(7)))
    assert v["LEMMA3_R8_7_C2"].lhs.value == 4 and v["LEMMA3_R8_7_C2"].rhs.value == 4
    assert set(by_id(check_lemma3(PrimeCase(17)))) == {"LEMMA3_R8_1_C1", "LEMMA3_R8_1_C2", "LEMMA3_R8_1_C3"}


@pytest.mark.parametrize("check", [check_lemma1, check_lemma2, check_lemma3])
def test_lemmas_hold_to_500(check):
    for p in primes_between(5, 500):
        for v in check(PrimeCase(p)):
            assert v.holds, v
            assert v.modulus == p
