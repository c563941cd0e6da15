"""Checkers for the harmonic-number and quarter-sum congruences modulo p.

Each quarter-sum statement is a row ``(c, limit, const, q_coef, chi_coef)``
meaning

    sum_{k=0}^{limit(p)} 1/(4k+c) == const + q_coef*q_p(2) + chi_coef*chi_p  (mod p).

Limits are the exact expressions from the statements, never rounded.
"""

from __future__ import annotations

from fractions import Fraction as F

from quadnomial.modring import ModInt, rat_to_mod
from quadnomial.numtheory import PrimeCase, fermat_quotient, harmonic_mod, pell_quotient, qsum
from quadnomial.report import Verdict


def _exact_div(num: int, den: int) -> int:
    assert num % den == 0, (num, den)
    return num // den


LEMMA2 = {
    1: [
        (1, lambda p: _exact_div(p - 5, 4), F(0), F(3, 4), F(0)),
        (2, lambda p: _exact_div(p - 1, 4), F(1), F(-1, 4), F(0)),
        (3, lambda p: _exact_div(p - 1, 4), F(1, 2), F(1, 4), F(0)),
    ],
    3: [
        (1, lambda p: _exact_div(p - 3, 4), F(0), F(1, 4), F(0)),
        (2, lambda p: _exact_div(p - 3, 4), F(0), F(-1, 4), F(0)),
        (3, lambda p: _exact_div(p - 7, 4), F(0), F(3, 4), F(0)),
    ],
}

_h = F(1, 2)
LEMMA3 = {
    1: [(1, F(2), F(-1, 4), -_h), (2, F(2, 3), F(-1, 2), _h), (3, F(2, 5), F(-1, 4), _h)],
    3: [(1, F(0), F(-1, 4), _h), (2, F(2), F(-1, 2), _h), (3, F(2, 3), F(-1, 4), -_h)],
    5: [(1, F(0), F(-1, 4), -_h), (2, F(0), F(-1, 2), _h), (3, F(2), F(-1, 4), _h)],
    7: [(1, F(0), F(-1, 4), _h), (2, F(0), F(-1, 2), _h), (3, F(0), F(-1, 4), -_h)],
}


def linear_form(p: int, const, q_coef, chi_coef, q: ModInt, chi: ModInt) -> ModInt:
    return rat_to_mod(const, p) + rat_to_mod(q_coef, p) * q + rat_to_mod(chi_coef, p) * chi


def check_lemma1(pc: PrimeCase) -> list[Verdict]:
    p = pc.p
    q = fermat_quotient(p, 2)
    chi = pell_quotient(pc)
    return [
        Verdict("LEMMA1_EQ6", p, None, None, harmonic_mod(p // 2, p), -2 * q),
        Verdict("LEMMA1_EQ7", p, None, None, harmonic_mod(p // 4, p), -3 * q),
        Verdict("LEMMA1_EQ8", p, None, None, harmonic_mod(p // 8, p), -4 * q - 2 * chi),
    ]


def check_lemma2(pc: PrimeCase) -> list[Verdict]:
    p = pc.p
    q = fermat_quotient(p, 2)
    zero = ModInt(0, p)
    out = []
    for c, limit, const, qc, _ in LEMMA2[pc.r4]:
        m = limit(p)
        out.append(Verdict(f"LEMMA2_R4_{pc.r4}_C{c}", p, None, None, qsum(c, m, p),
                           linear_form(p, const, qc, 0, q, zero)))
    return out


def lemma3_limit(pc: PrimeCase) -> int:
    return _exact_div(pc.p - pc.r8, 8)


def check_lemma3(pc: PrimeCase) -> list[Verdict]:
    p = pc.p
    q = fermat_quotient(p, 2)
    chi = pell_quotient(pc)
    m = lemma3_limit(pc)
    return [
        Verdict(f"LEMMA3_R8_{pc.r8}_C{c}", p, None, None, qsum(c, m, p),
                linear_form(p, const, qc, xc, q, chi))
        for c, const, qc, xc in LEMMA3[pc.r8]
    ]
