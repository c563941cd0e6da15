"""Statement-versus-proof-line adjudication for the known printed discrepancies.

Each item evaluates the quantity both ways, once with the closed form from
the statement and once with the conflicting line from its proof, and
records which one agrees with direct computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Callable

from quadnomial.congruence_suite import theorem_A2_rhs
from quadnomial.lemmas import lemma3_limit, linear_form
from quadnomial.modring import ModInt, rat_to_mod
from quadnomial.numtheory import (
    PrimeCase,
    fermat_quotient,
    fermat_quotient_lift,
    pell_quotient,
    pell_quotient_lift,
    primes_between,
    qsum,
)
from quadnomial.qnomial import _np_times_qsum, qnomial_row_mod_p2


@dataclass
class ErrataItem:
    item_id: str
    description: str
    applies: Callable[[PrimeCase], bool]
    # (pc, n) -> (computed, statement form, proof-line form)
    evaluate: Callable[[PrimeCase, int], tuple[ModInt, ModInt, ModInt]]
    uses_n: bool = False


@dataclass
class ErrataResult:
    item_id: str
    description: str
    cases: int = 0
    statement_matches: int = 0
    proof_matches: int = 0
    proof_counterexample: str = ""
    statement_counterexample: str = ""

    @property
    def winner(self) -> str:
        st = self.statement_matches == self.cases
        pr = self.proof_matches == self.cases
        if st and pr:
            return "both"
        if st:
            return "statement"
        if pr:
            return "proof"
        return "neither"

    def as_dict(self) -> dict:
        return {
            "item_id": self.item_id,
            "description": self.description,
            "cases": self.cases,
            "statement_matches": self.statement_matches,
            "proof_matches": self.proof_matches,
            "winner": self.winner,
            "statement_counterexample": self.statement_counterexample,
            "proof_counterexample": self.proof_counterexample,
        }


def _lemma3_first_sum(r8: int, proof_const):
    def evaluate(pc: PrimeCase, n: int):
        p = pc.p
        q, chi = fermat_quotient(p, 2), pell_quotient(pc)
        lhs = qsum(1, lemma3_limit(pc), p)
        # statements: -q/4 + chi/2 for p = 3 (mod 8), -q/4 - chi/2 for p = 5 (mod 8)
        chi_coef = F(1, 2) if r8 == 3 else F(-1, 2)
        stmt = linear_form(p, 0, F(-1, 4), chi_coef, q, chi)
        proof = linear_form(p, proof_const, F(-1, 4), F(-1, 2), q, chi)
        return lhs, stmt, proof

    return evaluate


def _thm_A2_r8_5(pc: PrimeCase, n: int):
    q, chi = fermat_quotient_lift(pc.p, 2), pell_quotient_lift(pc)
    m, np_ = pc.p2, n * pc.p
    lhs = ModInt(qnomial_row_mod_p2(pc, n)[(pc.p - 1) // 2], m)
    stmt = theorem_A2_rhs(pc, n, q, chi)
    proof = -1 - np_ * (rat_to_mod(F(13, 4), m) * q + chi)
    return lhs, stmt, proof


def _prop_B2_r8_5(pc: PrimeCase, n: int):
    q, chi = fermat_quotient_lift(pc.p, 2), pell_quotient_lift(pc)
    m, np_ = pc.p2, n * pc.p
    lhs = ModInt(sum(qnomial_row_mod_p2(pc, n)[: (pc.p - 1) // 2 + 1]), m)
    stmt = rat_to_mod(F(-np_, 2), m) * (q - chi)
    proof = ModInt(-_np_times_qsum(pc, n, 3, (pc.p - 5) // 8), m)
    return lhs, stmt, proof


ITEMS = [
    ErrataItem(
        "LEMMA3_R8_3_C1",
        "p = 3 (mod 8), sum of 1/(4k+1) up to (p-3)/8: statement -q/4 + chi/2, proof line 2 - q/4 - chi/2",
        lambda pc: pc.r8 == 3,
        _lemma3_first_sum(3, 2),
    ),
    ErrataItem(
        "LEMMA3_R8_5_C1",
        "p = 5 (mod 8), sum of 1/(4k+1) up to (p-5)/8: statement -q/4 - chi/2, proof line 2 - q/4 - chi/2",
        lambda pc: pc.r8 == 5,
        _lemma3_first_sum(5, 2),
    ),
    ErrataItem(
        "THM_A_EQ2_R8_5",
        "p = 5 (mod 8), C(np-1,(p-1)/2)_3: statement -np(q/4 - chi), proof line -1 - np(13q/4 + chi)",
        lambda pc: pc.r8 == 5,
        _thm_A2_r8_5,
        uses_n=True,
    ),
    ErrataItem(
        "PROP_B2_R8_5",
        "p = 5 (mod 8), half-row sum: statement -np(q - chi)/2, proof line -np * sum of 1/(4k+3) up to (p-5)/8",
        lambda pc: pc.r8 == 5,
        _prop_B2_r8_5,
        uses_n=True,
    ),
]


def adjudicate(prime_min: int, prime_max: int, n_max: int = 1, items=None) -> list[ErrataResult]:
    """Tally each item over the prime range; items with no applicable prime are omitted."""
    items = ITEMS if items is None else items
    pcs = [PrimeCase(p) for p in primes_between(max(prime_min, 5), prime_max)]
    results = []
    for item in items:
        res = ErrataResult(item.item_id, item.description)
        for pc in pcs:
            if not item.applies(pc):
                continue
            for n in range(1, (n_max if item.uses_n else 1) + 1):
                lhs, stmt, proof = item.evaluate(pc, n)
                res.cases += 1
                tag = f"p={pc.p}" + (f", n={n}" if item.uses_n else "")
                if lhs == stmt:
                    res.statement_matches += 1
                elif not res.statement_counterexample:
                    res.statement_counterexample = tag
                if lhs == proof:
                    res.proof_matches += 1
                elif not res.proof_counterexample:
                    res.proof_counterexample = tag
        if res.cases:
            results.append(res)
    return results
