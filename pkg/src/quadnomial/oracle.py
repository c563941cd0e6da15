"""Exact ground truth: polynomial powers and exact harmonic/quarter sums.

Nothing here depends on the congruence machinery in :mod:`quadnomial.qnomial`;
coefficients come from plain polynomial multiplication, and sums are
accumulated as exact fractions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

DEFAULT_BUDGET = 200_000

QUADRINOMIAL = (1, 1, 1, 1)
TRINOMIAL = (1, 1, 1)


class SizeBudgetExceeded(RuntimeError):
    """A coefficient vector would be longer than the configured budget."""


def _trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _schoolbook(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    out = [0] * length
    for i, x in enumerate(a):
        if x == 0 or i >= length:
            continue
        for j, y in enumerate(b[: length - i]):
            out[i + j] += x * y
    return out


def _kronecker(a: Sequence[int], b: Sequence[int], length: int) -> list[int]:
    # Pack both vectors into big integers with one slot per coefficient, wide
    # enough that no product coefficient can carry into the next slot.
    bound = max(a) * max(b) * min(len(a), len(b))
    width = bound.bit_length() // 8 + 1
    pa = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in a), "little")
    pb = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in b), "little")
    full = len(a) + len(b) - 1
    raw = (pa * pb).to_bytes(width * full, "little")
    return [int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(length)]


def convolve(a: Sequence[int], b: Sequence[int], modulus: Optional[int] = None,
             max_degree: Optional[int] = None) -> list[int]:
    """Product of two coefficient vectors, optionally reduced and truncated."""
    length = len(a) + len(b) - 1
    if max_degree is not None:
        length = min(length, max_degree + 1)
    if min(a) >= 0 and min(b) >= 0 and len(a) > 8 and len(b) > 8:
        out = _kronecker(a, b, length)
    else:
        out = _schoolbook(a, b, length)
    if modulus is not None:
        out = [x % modulus for x in out]
    return out


def poly_pow(base: Sequence[int], n: int, modulus: Optional[int] = None,
             max_degree: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Coefficients of base(x)**n by square-and-multiply.

    With ``modulus`` every product is reduced; with ``max_degree`` only the
    coefficients of x**0 .. x**max_degree are kept (they do not depend on
    the higher ones).  Trailing zeros are trimmed.
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    base = _trim([int(c) for c in base])
    deg = len(base) - 1
    length = deg * n + 1
    if max_degree is not None:
        length = min(length, max_degree + 1)
    if length > budget:
        raise SizeBudgetExceeded(f"{length} coefficients exceeds budget {budget}")
    if modulus is not None:
        base = [c % modulus for c in base]
    result = [1 if modulus != 1 else 0]
    sq = base
    while n:
        if n & 1:
            result = convolve(result, sq, modulus, max_degree)
        n >>= 1
        if n:
            sq = convolve(sq, sq, modulus, max_degree)
    return _trim(result)


@lru_cache(maxsize=64)
def _cached_row(base: tuple, n: int, modulus: Optional[int], max_degree: Optional[int],
                budget: int) -> tuple[int, ...]:
    return tuple(poly_pow(base, n, modulus, max_degree, budget))


def row(base: tuple, n: int, modulus: Optional[int] = None, max_degree: Optional[int] = None,
        budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Cached :func:`poly_pow` for tuple bases."""
    return _cached_row(tuple(base), n, modulus, max_degree, budget)


def coefficient(base: tuple, n: int, k: int, modulus: Optional[int] = None,
                full_row: bool = False, budget: int = DEFAULT_BUDGET) -> int:
    """Coefficient of x**k in base(x)**n; 0 outside the support."""
    deg = len(base) - 1
    if k < 0 or k > deg * n:
        return 0
    r = row(base, n, modulus, None if full_row else k, budget)
    return r[k] if k < len(r) else 0


def exact_harmonic(m: int) -> Fraction:
    if m < 0:
        raise ValueError("index must be nonnegative")
    return sum((Fraction(1, j) for j in range(1, m + 1)), Fraction(0))


def exact_quarter_sum(c: int, m: int) -> Fraction:
    """Sum of 1/(4k+c) for 0 <= k <= m (empty for m = -1)."""
    if c not in (1, 2, 3):
        raise ValueError(f"offset must be 1, 2 or 3, got {c}")
    if m < -1:
        raise ValueError("upper index must be >= -1")
    return sum((Fraction(1, 4 * k + c) for k in range(m + 1)), Fraction(0))
