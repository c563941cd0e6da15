"""Residues modulo p or p**2.

Every residue carries its modulus, and arithmetic between residues with
different moduli raises instead of coercing.  Rational constants are
represented with :class:`fractions.Fraction` and embedded with
:func:`rat_to_mod`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class NotInvertible(ArithmeticError):
    """Raised when a value shares a factor with the modulus."""


class ModulusMismatch(ValueError):
    """Raised when combining residues with different moduli."""


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m`` as a plain int."""
    g, x, _ = _egcd(a % m, m)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return x % m


@dataclass(frozen=True)
class ModInt:
    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"cannot combine residues mod {self.modulus} and mod {other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ModInt(self.value + b, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ModInt(self.value - b, self.modulus)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ModInt(b - self.value, self.modulus)

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return ModInt(self.value * b, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, ModInt):
            return self.value == other.value and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def inv(self) -> ModInt:
        return mod_inv(self)

    def reduce(self, modulus: int) -> ModInt:
        """Image under Z/m -> Z/d for a divisor ``d`` of the modulus."""
        if self.modulus % modulus:
            raise ModulusMismatch(f"{modulus} does not divide {self.modulus}")
        return ModInt(self.value, modulus)

    def signed(self) -> int:
        """Representative in (-m/2, m/2]."""
        v = self.value
        return v - self.modulus if 2 * v > self.modulus else v

    def __repr__(self):
        return f"ModInt({self.value}, {self.modulus})"

    def __str__(self):
        return f"{self.value} (mod {self.modulus})"


def mod_inv(a: ModInt) -> ModInt:
    return ModInt(inverse(a.value, a.modulus), a.modulus)


def rat_to_mod(q, modulus: int) -> ModInt:
    """Embed an int or Fraction into Z/modulus.

    Raises NotInvertible if the reduced denominator is not a unit.
    """
    q = Fraction(q)
    return ModInt(q.numerator * inverse(q.denominator, modulus), modulus)
