"""Quadrinomial coefficients C(N, k)_3, the coefficient of x**k in (1+x+x**2+x**3)**N.

Exact values come from :mod:`quadnomial.oracle`.  For rows N = np - 1 and
k <= p - 1 there is a fast path modulo p**2 built from

    (1+x+x^2+x^3)^N = (1+x^2)^N (1+x)^N,
    C(N, k)_3 = sum_j C(N, j) C(N, k - 2j),
    C(np-1, j) = (-1)^j (1 - np H_j)  (mod p^2),  0 <= j <= p - 1,

so a whole row prefix costs one table of harmonic numbers mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from quadnomial import oracle
from quadnomial.modring import ModInt, inverse
from quadnomial.numtheory import IndexTooLarge, PrimeCase, harmonic_prefix


class SideConditionViolated(ValueError):
    pass


def qnomial_exact(n_row: int, k: int, modulus: Optional[int] = None,
                  budget: int = oracle.DEFAULT_BUDGET) -> int:
    """Exact C(n_row, k)_3, reduced mod ``modulus`` if given; 0 outside [0, 3 n_row]."""
    if n_row < 0:
        raise ValueError("row must be nonnegative")
    return oracle.coefficient(oracle.QUADRINOMIAL, n_row, k, modulus, budget=budget)


def _check_k(k: int, p: int):
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k >= p:
        raise IndexTooLarge(f"fast path needs k <= p - 1 = {p - 1}, got {k}")


@lru_cache(maxsize=512)
def _binom_row(p: int, n: int) -> tuple[int, ...]:
    # C(np-1, j) mod p^2 for j = 0..p-1
    m = p * p
    np_ = n * p
    h = harmonic_prefix(p)
    return tuple((1 - np_ * h[j]) % m if j % 2 == 0 else (np_ * h[j] - 1) % m for j in range(p))


def binom_row_np_minus_1(k: int, pc: PrimeCase, n: int) -> ModInt:
    """C(np-1, k) modulo p**2 for 0 <= k <= p - 1."""
    _check_k(k, pc.p)
    return ModInt(_binom_row(pc.p, n)[k], pc.p2)


@lru_cache(maxsize=512)
def _qnomial_row(p: int, n: int) -> tuple[int, ...]:
    m = p * p
    b = _binom_row(p, n)
    return tuple(sum(b[j] * b[k - 2 * j] for j in range(k // 2 + 1)) % m for k in range(p))


def qnomial_row_mod_p2(pc: PrimeCase, n: int) -> tuple[int, ...]:
    """(C(np-1, 0)_3, ..., C(np-1, p-1)_3) modulo p**2 via the fast path."""
    if n < 1:
        raise ValueError("multiplier must be >= 1")
    return _qnomial_row(pc.p, n)


def qnomial_mod_p2(k: int, pc: PrimeCase, n: int) -> ModInt:
    """C(np-1, k)_3 modulo p**2 for 0 <= k <= p - 1."""
    _check_k(k, pc.p)
    if n < 1:
        raise ValueError("multiplier must be >= 1")
    return ModInt(_qnomial_row(pc.p, n)[k], pc.p2)


@dataclass(frozen=True)
class Prop2Class:
    """Column k = 4*k4 + residue of row np - 1, matched to its closed form.

    The printed side condition for residue 3 is 4*k4 + 2 <= p - 1, the same
    as for residue 2, so k = p is admitted there when p = 3 (mod 4).
    """

    residue: int
    k4: int
    pc: PrimeCase
    n: int

    def __post_init__(self):
        if self.residue not in (0, 1, 2, 3):
            raise ValueError(f"residue must be in 0..3, got {self.residue}")
        if self.k4 < 0 or self.n < 1:
            raise ValueError("need k4 >= 0 and n >= 1")
        if 4 * self.k4 + min(self.residue, 2) > self.pc.p - 1:
            raise SideConditionViolated(
                f"4*{self.k4}+{min(self.residue, 2)} > p-1 for p={self.pc.p}"
            )

    @property
    def k(self) -> int:
        return 4 * self.k4 + self.residue

    @classmethod
    def of(cls, k: int, pc: PrimeCase, n: int) -> Prop2Class:
        k4, r = divmod(k, 4)
        return cls(r, k4, pc, n)


@lru_cache(maxsize=512)
def _quarter_prefix(p: int, c: int) -> tuple[int, ...]:
    # entry m is sum_{j=0}^{m} 1/(4j+c) mod p over terms with 4j+c < p
    out = []
    s = 0
    for j in range((p - c) // 4 + 1):
        d = 4 * j + c
        if d < p:
            s = (s + inverse(d, p)) % p
            out.append(s)
    return tuple(out)


def _np_times_qsum(pc: PrimeCase, n: int, c: int, m: int) -> int:
    """np * sum_{j=0}^{m} 1/(4j+c) modulo p**2, for 4m+c <= p.

    A term with 4j+c = p contributes np/p = n exactly; every other term is
    a unit mod p, so only its residue mod p matters.
    """
    p = pc.p
    if m < 0:
        return 0
    if 4 * m + c > p:
        raise ValueError(f"quarter-sum limit {m} runs past p={p}")
    extra = 0
    if 4 * m + c == p:
        extra, m = n, m - 1
    s = _quarter_prefix(p, c)[m] if m >= 0 else 0
    return (n * p * s + extra) % pc.p2


def prop2_rhs(cls: Prop2Class) -> ModInt:
    pc, n, k4 = cls.pc, cls.n, cls.k4
    p, m = pc.p, pc.p2
    # (3/4) H_{k4} mod p, scaled by np
    h = harmonic_prefix(p)[k4]
    np_h = n * p * (3 * inverse(4, p) * h % p)
    if cls.residue == 0:
        v = 1 - np_h - _np_times_qsum(pc, n, 3, k4 - 1)
    elif cls.residue == 1:
        v = -1 + np_h + _np_times_qsum(pc, n, 1, k4)
    elif cls.residue == 2:
        v = _np_times_qsum(pc, n, 2, k4) - _np_times_qsum(pc, n, 1, k4)
    else:
        v = _np_times_qsum(pc, n, 3, k4) - _np_times_qsum(pc, n, 2, k4)
    return ModInt(v, m)


def block_sum_rhs(k4: int, pc: PrimeCase, n: int) -> ModInt:
    """np/(4*k4 + 3) modulo p**2, for 0 <= k4 <= ceil(p/4) - 1."""
    p = pc.p
    if k4 < 0 or k4 > (p + 3) // 4 - 1:
        raise ValueError(f"k4 out of range for p={p}: {k4}")
    d = 4 * k4 + 3
    if d == p:
        return ModInt(n, pc.p2)
    return ModInt(n * p * inverse(d, p), pc.p2)
