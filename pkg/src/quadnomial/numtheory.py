"""Primes, Fermat and Pell quotients, harmonic numbers and quarter-sums mod p."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from quadnomial.modring import ModInt, inverse


class NotCoprime(ValueError):
    pass


class IntegralityViolation(ArithmeticError):
    pass


class IndexTooLarge(ValueError):
    pass


class TermDivisibleByP(ValueError):
    pass


# Deterministic for every n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin. The witness set is exact below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi."""
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(hi**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, hi + 1, i)))
    return [i for i in range(max(lo, 2), hi + 1) if sieve[i]]


@dataclass(frozen=True)
class PrimeCase:
    """A prime p >= 5 with the residue classes that select closed forms."""

    p: int

    def __post_init__(self):
        if self.p < 5 or not is_prime(self.p):
            raise ValueError(f"expected a prime >= 5, got {self.p}")

    @property
    def p2(self) -> int:
        return self.p * self.p

    @property
    def r4(self) -> int:
        return self.p % 4

    @property
    def r8(self) -> int:
        return self.p % 8

    @property
    def r3(self) -> int:
        return self.p % 3

    @property
    def r6(self) -> int:
        return self.p % 6

    @property
    def eps2(self) -> int:
        """Legendre symbol (2/p)."""
        return 1 if self.r8 in (1, 7) else -1


def _check_coprime(p: int, a: int):
    if a % p == 0:
        raise NotCoprime(f"{p} divides {a}")


def fermat_quotient(p: int, a: int) -> ModInt:
    """(a**(p-1) - 1)/p modulo p."""
    _check_coprime(p, a)
    return ModInt((pow(a, p - 1, p * p) - 1) // p, p)


def fermat_quotient_lift(p: int, a: int) -> ModInt:
    """(a**(p-1) - 1)/p modulo p**2."""
    _check_coprime(p, a)
    return ModInt((pow(a, p - 1, p**3) - 1) // p, p * p)


def pell(n: int) -> int:
    """Exact Pell number P_n (P_0 = 0, P_1 = 1, P_{n+1} = 2 P_n + P_{n-1})."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def pell_mod(n: int, m: int) -> int:
    """P_n mod m by fast doubling.

    Uses P_{2k} = 2 P_k (P_{k+1} - P_k) and P_{2k+1} = P_k**2 + P_{k+1}**2.
    """
    a, b = 0, 1  # (P_k, P_{k+1}) for k = 0
    for bit in bin(n)[2:]:
        a, b = 2 * a * (b - a) % m, (a * a + b * b) % m
        if bit == "1":
            a, b = b, (2 * b + a) % m
    return a


def _pell_quotient_int(pc: PrimeCase, m: int) -> int:
    p = pc.p
    v = pell_mod(p - pc.eps2, p * m)
    if v % p:
        raise IntegralityViolation(f"P_{p - pc.eps2} is not divisible by {p}")
    return v // p


def pell_quotient(pc: PrimeCase) -> ModInt:
    """Pell quotient P_{p-(2/p)}/p modulo p."""
    return ModInt(_pell_quotient_int(pc, pc.p), pc.p)


def pell_quotient_lift(pc: PrimeCase) -> ModInt:
    """Pell quotient modulo p**2."""
    return ModInt(_pell_quotient_int(pc, pc.p2), pc.p2)


@lru_cache(maxsize=256)
def harmonic_prefix(p: int) -> tuple[int, ...]:
    """(H_0, H_1, ..., H_{p-1}) modulo p."""
    out = [0] * p
    # 1/j = (j-1)! / j!, so all inverses follow from one inversion of (p-1)!
    fact = [1] * p
    for j in range(1, p):
        fact[j] = fact[j - 1] * j % p
    inv_fact = inverse(fact[p - 1], p)
    invs = [0] * p
    for j in range(p - 1, 0, -1):
        invs[j] = inv_fact * fact[j - 1] % p
        inv_fact = inv_fact * j % p
    h = 0
    for j in range(1, p):
        h += invs[j]
        out[j] = h % p
    return tuple(out)


def harmonic_mod(m: int, p: int) -> ModInt:
    """H_m modulo p, for 0 <= m < p."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    if m >= p:
        raise IndexTooLarge(f"H_{m} has a term 1/{p}")
    return ModInt(harmonic_prefix(p)[m], p)


@dataclass(frozen=True)
class QuarterSumSpec:
    """The sum of 1/(4k+c) for 0 <= k <= m, taken mod p. m = -1 is empty."""

    c: int
    m: int
    p: int

    def __post_init__(self):
        if self.c not in (1, 2, 3):
            raise ValueError(f"offset must be 1, 2 or 3, got {self.c}")
        if self.m < -1:
            raise ValueError(f"upper index must be >= -1, got {self.m}")
        if 4 * self.m + self.c >= self.p:
            for k in range(self.m + 1):
                if (4 * k + self.c) % self.p == 0:
                    raise TermDivisibleByP(f"term 1/{4 * k + self.c} in quarter-sum mod {self.p}")


def quarter_sum(spec: QuarterSumSpec) -> ModInt:
    p = spec.p
    return ModInt(sum(inverse(4 * k + spec.c, p) for k in range(spec.m + 1)), p)


def qsum(c: int, m: int, p: int) -> ModInt:
    return quarter_sum(QuarterSumSpec(c, m, p))
