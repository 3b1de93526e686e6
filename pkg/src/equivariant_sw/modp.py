"""Exact arithmetic in F_p for small odd primes p."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from equivariant_sw.errors import ZeroDivisionModP


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime p >= 3."""

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"modulus must be an int, got {self.p!r}")
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime, got {self.p}")

    def __call__(self, value: int) -> "Residue":
        return Residue(value, self)

    def __int__(self) -> int:
        return self.p


def _coerce_modulus(modulus: PrimeModulus | int) -> PrimeModulus:
    return modulus if isinstance(modulus, PrimeModulus) else PrimeModulus(modulus)


class Residue:
    """An element of F_p, stored normalized to {0, ..., p-1}."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: PrimeModulus | int):
        modulus = _coerce_modulus(modulus)
        if isinstance(value, Residue):
            value = value.value
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", int(value) % modulus.p)

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    @property
    def p(self) -> int:
        return self.modulus.p

    def _lift(self, other) -> "Residue":
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(f"moduli differ: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return Residue(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Residue(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Residue(self.value - o.value, self.modulus)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * inv(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * inv(self)

    def __pow__(self, n: int):
        if n < 0:
            return inv(self) ** (-n)
        return Residue(pow(self.value, n, self.p), self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return (other - self.value) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, p={self.p})"

    def __str__(self):
        return f"{self.value} mod {self.p}"


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def inv(a: Residue) -> Residue:
    if a.value == 0:
        raise ZeroDivisionModP(f"0 has no inverse mod {a.p}")
    g, x, _ = egcd(a.value, a.p)
    assert g == 1
    return Residue(x, a.modulus)


def ratio(
    numerators: Iterable[Residue | int],
    denominators: Iterable[Residue | int],
    modulus: PrimeModulus | int | None = None,
) -> Residue:
    """(prod numerators) / (prod denominators) in F_p; empty products are 1.

    Plain ints are accepted when ``modulus`` is given or when at least one
    entry is already a :class:`Residue`.
    """
    numerators, denominators = list(numerators), list(denominators)
    if modulus is None:
        for x in numerators + denominators:
            if isinstance(x, Residue):
                modulus = x.modulus
                break
        else:
            raise ValueError("ratio needs a modulus when all entries are plain ints")
    modulus = _coerce_modulus(modulus)
    one = Residue(1, modulus)
    num = reduce(lambda acc, x: acc * Residue(x, modulus), numerators, one)
    den = reduce(lambda acc, x: acc * Residue(x, modulus), denominators, one)
    if den.value == 0:
        raise ZeroDivisionModP(f"zero denominator mod {modulus.p}")
    return num * inv(den)


def as_exponent(a: Residue) -> int:
    """The representative of a nonzero residue in {1, ..., p-1}."""
    if a.value == 0:
        raise ZeroDivisionModP("the zero residue has no exponent representative")
    return a.value
