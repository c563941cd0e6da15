"""Checkers for the mod p**2 congruences on quadrinomial and trinomial coefficients.

Each checker returns :class:`~quadnomial.report.Verdict` objects whose
``lhs`` comes from the fast path when one exists, with the exact oracle
value attached for cross-checking.  Closed forms use the mod p**2 lifts of
q_p(2), q_p(3) and the Pell quotient.
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import Optional

from quadnomial import oracle
from quadnomial.lemmas import check_lemma1, check_lemma2, check_lemma3
from quadnomial.modring import ModInt, rat_to_mod
from quadnomial.numtheory import PrimeCase, fermat_quotient_lift, pell_quotient_lift
from quadnomial.qnomial import Prop2Class, block_sum_rhs, prop2_rhs, qnomial_row_mod_p2
from quadnomial.report import SweepReport, Verdict

RowTooLarge = oracle.SizeBudgetExceeded

CLAIM_GROUPS = (
    "THM_A_EQ1",
    "THM_A_EQ2",
    "PROP_B1",
    "PROP_B2",
    "COR_C",
    "EM",
    "LEMMA1",
    "LEMMA2",
    "LEMMA3",
    "PROP2",
    "BLOCK_SUM",
)

NOTE_Q22 = "printed q_2(2) read as q_p(2)"
NOTE_CHI = "chi(p) in the proof read as the Pell quotient chi_p"
NOTE_MOD3 = "proof branch headed 'p = 1 (mod 3)' read as p = 1 (mod 4)"
NOTE_EQ13 = "printed side condition 4k+2 <= p-1 admits k = p; checked against the exact row"


def _c(x, m: int) -> ModInt:
    return rat_to_mod(x, m)


def _oracle_prefix(pc: PrimeCase, n: int, budget: int) -> Optional[tuple[int, ...]]:
    # Exact coefficients of x^0..x^p in row np-1, reduced mod p^2.
    try:
        return oracle.row(oracle.QUADRINOMIAL, n * pc.p - 1, pc.p2, pc.p, budget)
    except oracle.SizeBudgetExceeded:
        return None


def _at(row: Optional[tuple], k: int) -> Optional[int]:
    if row is None:
        return None
    return row[k] if k < len(row) else 0


def _sum(row: Optional[tuple], upto: int) -> Optional[int]:
    if row is None:
        return None
    return sum(row[: upto + 1])


def check_theorem_A1(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> Verdict:
    m, np_ = pc.p2, n * pc.p
    q = fermat_quotient_lift(pc.p, 2)
    if pc.r4 == 1:
        rhs = 1 + _c(2 * np_, m) * q
    else:
        rhs = _c(F(-np_, 2), m) * q
    lhs = ModInt(qnomial_row_mod_p2(pc, n)[pc.p - 1], m)
    return Verdict("THM_A_EQ1", pc.p, n, pc.p - 1, lhs, rhs,
                   oracle=_at(_oracle_prefix(pc, n, budget), pc.p - 1))


def theorem_A2_forms(np_: int, m: int, q: ModInt, chi: ModInt) -> dict[int, ModInt]:
    """The four closed forms for C(np-1, (p-1)/2)_3 keyed by p mod 8."""
    big = _c(F(13, 4), m) * q + chi
    small = _c(F(1, 4), m) * q - chi
    return {
        1: 1 + np_ * big,
        3: -1 - np_ * big,
        5: -np_ * small,
        7: np_ * small,
    }


def theorem_A2_rhs(pc: PrimeCase, n: int, q: ModInt, chi: ModInt) -> ModInt:
    return theorem_A2_forms(n * pc.p, pc.p2, q, chi)[pc.r8]


def check_theorem_A2(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> Verdict:
    k = (pc.p - 1) // 2
    q = fermat_quotient_lift(pc.p, 2)
    chi = pell_quotient_lift(pc)
    lhs = ModInt(qnomial_row_mod_p2(pc, n)[k], pc.p2)
    return Verdict("THM_A_EQ2", pc.p, n, k, lhs, theorem_A2_rhs(pc, n, q, chi),
                   oracle=_at(_oracle_prefix(pc, n, budget), k))


def check_prop_B1(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> Verdict:
    m, np_ = pc.p2, n * pc.p
    q = fermat_quotient_lift(pc.p, 2)
    if pc.r4 == 1:
        rhs = 1 + _c(F(9, 4) * np_, m) * q
        note = f"{NOTE_Q22}; {NOTE_MOD3}"
    else:
        rhs = _c(F(-np_, 4), m) * q
        note = NOTE_Q22
    lhs = ModInt(sum(qnomial_row_mod_p2(pc, n)), m)
    return Verdict("PROP_B1", pc.p, n, None, lhs, rhs, note,
                   oracle=_sum(_oracle_prefix(pc, n, budget), pc.p - 1))


def check_prop_B2(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> Verdict:
    m, np_ = pc.p2, n * pc.p
    q = fermat_quotient_lift(pc.p, 2)
    chi = pell_quotient_lift(pc)
    rhs = {
        1: 1 + _c(F(3, 2) * np_, m) * (2 * q + chi),
        3: _c(F(-np_, 4), m) * (q - 2 * chi),
        5: _c(F(-np_, 2), m) * (q - chi),
        7: _c(F(-np_, 4), m) * (q + 2 * chi),
    }[pc.r8]
    half = (pc.p - 1) // 2
    lhs = ModInt(sum(qnomial_row_mod_p2(pc, n)[: half + 1]), m)
    return Verdict("PROP_B2", pc.p, n, None, lhs, rhs, NOTE_CHI,
                   oracle=_sum(_oracle_prefix(pc, n, budget), half))


def cor_C_row(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> tuple[int, ...]:
    """The whole row n*p**2 - 1 reduced mod p**2; raises RowTooLarge past the budget."""
    return oracle.row(oracle.QUADRINOMIAL, n * pc.p2 - 1, pc.p2, None, budget)


def check_cor_C(pc: PrimeCase, n: int, k: int, budget: int = oracle.DEFAULT_BUDGET) -> Verdict:
    if not 0 <= k <= pc.p - 1:
        raise ValueError(f"k must lie in [0, p-1], got {k}")
    m = pc.p2
    lhs = ModInt(cor_C_row(pc, n, budget)[k], m)
    rhs = ModInt((1, -1, 0, 0)[k % 4], m)
    return Verdict("COR_C", pc.p, n, k, lhs, rhs)


def check_EM_trinomial(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> list[Verdict]:
    """Trinomial congruences for C(np-1, p-1)_2 and C(np-1, (p-1)/2)_2."""
    p, m, np_ = pc.p, pc.p2, n * pc.p
    row = oracle.row(oracle.TRINOMIAL, np_ - 1, m, p - 1, budget)
    q2 = fermat_quotient_lift(p, 2)
    q3 = fermat_quotient_lift(p, 3)
    if pc.r3 == 1:
        full = 1 + np_ * q3
    else:
        full = -1 - np_ * q3
    if pc.r6 == 1:
        half = 1 + np_ * (2 * q2 + _c(F(1, 2), m) * q3)
    else:
        half = _c(F(-np_, 2), m) * q3
    k = (p - 1) // 2
    return [
        Verdict("EM_FULL", p, n, p - 1, ModInt(row[p - 1], m), full),
        Verdict("EM_HALF", p, n, k, ModInt(row[k], m), half),
    ]


_PROP2_IDS = ("PROP2_EQ10", "PROP2_EQ11", "PROP2_EQ12", "PROP2_EQ13")


def check_prop2(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> list[Verdict]:
    """Every column 0 <= k <= p-1 against its closed form, plus the k = p column
    that the printed side condition of the residue-3 line admits."""
    fast = qnomial_row_mod_p2(pc, n)
    exact = _oracle_prefix(pc, n, budget)
    out = []
    for k in range(pc.p):
        cls = Prop2Class.of(k, pc, n)
        out.append(Verdict(_PROP2_IDS[cls.residue], pc.p, n, k, ModInt(fast[k], pc.p2),
                           prop2_rhs(cls), oracle=_at(exact, k)))
    if pc.r4 == 3:
        cls = Prop2Class.of(pc.p, pc, n)
        if exact is not None:
            out.append(Verdict("PROP2_EQ13_PRINTED", pc.p, n, pc.p, ModInt(exact[pc.p], pc.p2),
                               prop2_rhs(cls), NOTE_EQ13))
    return out


def check_block_sum(pc: PrimeCase, n: int, budget: int = oracle.DEFAULT_BUDGET) -> list[Verdict]:
    """Four consecutive columns 4k..4k+3 summing to np/(4k+3), for 4k+3 <= p-1."""
    fast = qnomial_row_mod_p2(pc, n)
    exact = _oracle_prefix(pc, n, budget)
    out = []
    k4 = 0
    while 4 * k4 + 3 <= pc.p - 1:
        lo = 4 * k4
        lhs = ModInt(sum(fast[lo : lo + 4]), pc.p2)
        ora = None if exact is None else sum(exact[lo : lo + 4])
        out.append(Verdict("BLOCK_SUM", pc.p, n, k4, lhs, block_sum_rhs(k4, pc, n), oracle=ora))
        k4 += 1
    return out


def run_prime(p: int, n_max: int, groups, budget: int = oracle.DEFAULT_BUDGET) -> SweepReport:
    """All selected checks for one prime and multipliers 1..n_max."""
    pc = PrimeCase(p)
    rep = SweepReport()
    groups = set(groups)
    if "LEMMA1" in groups:
        rep.extend(check_lemma1(pc))
    if "LEMMA2" in groups:
        rep.extend(check_lemma2(pc))
    if "LEMMA3" in groups:
        rep.extend(check_lemma3(pc))
    for n in range(1, n_max + 1):
        if "THM_A_EQ1" in groups:
            rep.extend([check_theorem_A1(pc, n, budget)])
        if "THM_A_EQ2" in groups:
            rep.extend([check_theorem_A2(pc, n, budget)])
        if "PROP_B1" in groups:
            rep.extend([check_prop_B1(pc, n, budget)])
            rep.note_erratum("PROP_B1", f"p={p}, n={n}", NOTE_Q22)
            if pc.r4 == 1:
                rep.note_erratum("PROP_B1", f"p={p}, n={n}", NOTE_MOD3)
        if "PROP_B2" in groups:
            rep.extend([check_prop_B2(pc, n, budget)])
            rep.note_erratum("PROP_B2", f"p={p}, n={n}", NOTE_CHI)
        if "COR_C" in groups:
            rep.extend(check_cor_C(pc, n, k, budget) for k in range(p))
        if "EM" in groups:
            rep.extend(check_EM_trinomial(pc, n, budget))
        if "PROP2" in groups:
            v = check_prop2(pc, n, budget)
            rep.extend(v)
            if pc.r4 == 3:
                rep.note_erratum("PROP2_EQ13_PRINTED", f"p={p}, n={n}", NOTE_EQ13)
        if "BLOCK_SUM" in groups:
            rep.extend(check_block_sum(pc, n, budget))
    return rep
