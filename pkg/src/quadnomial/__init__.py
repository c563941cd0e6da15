"""Quadrinomial coefficients modulo p and p**2, with congruence checkers."""

from quadnomial.modring import ModInt, ModulusMismatch, NotInvertible, mod_inv, rat_to_mod
from quadnomial.numtheory import (
    PrimeCase,
    fermat_quotient,
    fermat_quotient_lift,
    harmonic_mod,
    is_prime,
    pell,
    pell_quotient,
    pell_quotient_lift,
    primes_between,
    quarter_sum,
)
from quadnomial.qnomial import qnomial_exact, qnomial_mod_p2
from quadnomial.report import SweepReport, Verdict

__all__ = [
    "ModInt",
    "ModulusMismatch",
    "NotInvertible",
    "PrimeCase",
    "SweepReport",
    "Verdict",
    "fermat_quotient",
    "fermat_quotient_lift",
    "harmonic_mod",
    "is_prime",
    "mod_inv",
    "pell",
    "pell_quotient",
    "pell_quotient_lift",
    "primes_between",
    "qnomial_exact",
    "qnomial_mod_p2",
    "quarter_sum",
    "rat_to_mod",
]

__version__ = "0.1.0"
