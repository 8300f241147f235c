"""Arithmetic in the binary fields GF(2^e).

Elements are encoded as ints: bit i is the coefficient of x^i in the
residue modulo the field's irreducible modulus.  The hot paths
(:meth:`FieldSpec.mul`, :meth:`FieldSpec.inv`, ...) work on those raw
ints; :class:`FieldElement` is a thin checked wrapper for callers that
want operator syntax and field-mismatch detection.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

# Standard primitive polynomials, bit-encoded.
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,          # x^2 + x + 1
    3: 0b1011,         # x^3 + x + 1
    4: 0b10011,        # x^4 + x + 1
    5: 0b100101,       # x^5 + x^2 + 1
    6: 0b1000011,      # x^6 + x + 1
    7: 0b10000011,     # x^7 + x + 1
    8: 0b100011101,    # x^8 + x^4 + x^3 + x^2 + 1
}

_TABLE_LIMIT = 8


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-encoded polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` on division by ``m`` over GF(2)."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(m)-1."""
    deg = m.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg):
        for f in range(1 << d, 1 << (d + 1)):
            if poly_mod(m, f) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(2^e) realized as GF(2)[x] / (modulus)."""

    e: int
    modulus: int

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"exponent must be >= 1, got {self.e}")
        if self.modulus.bit_length() - 1 != self.e:
            raise ValueError(
                f"modulus {self.modulus:#x} does not have degree {self.e}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")

    @classmethod
    def default(cls, e: int) -> FieldSpec:
        try:
            return cls(e, DEFAULT_MODULI[e])
        except KeyError:
            raise ValueError(f"no default modulus for e={e}") from None

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``"e=<int>,mod=<hex>"``; ``mod`` may be omitted."""
        m = re.fullmatch(r"\s*e\s*=\s*(\d+)\s*(?:,\s*mod\s*=\s*(0[xX])?([0-9a-fA-F]+)\s*)?",
                         text)
        if m is None:
            raise ValueError(f"cannot parse field spec {text!r}")
        e = int(m.group(1))
        if m.group(3) is None:
            return cls.default(e)
        return cls(e, int(m.group(3), 16))

    def __str__(self) -> str:
        return f"e={self.e},mod={self.modulus:#x}"

    @property
    def q(self) -> int:
        return 1 << self.e

    # -- raw-int arithmetic --------------------------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")
        return a

    @cached_property
    def _table(self):
        if self.e > _TABLE_LIMIT:
            return None
        q = self.q
        t = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                t[a, b] = t[b, a] = poly_mod(clmul(a, b), self.modulus)
        return t.tolist()

    def add(self, a: int, b: int) -> int:
        return self._check(a) ^ self._check(b)

    def mul(self, a: int, b: int) -> int:
        t = self._table
        if t is not None:
            return t[a][b]
        return poly_mod(clmul(self._check(a), self._check(b)), self.modulus)

    def pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def sqrt(self, a: int) -> int:
        return self.pow(a, 1 << (self.e - 1))

    def frobenius(self, a: int) -> int:
        return self.mul(a, a)

    def elements(self) -> list[int]:
        return list(range(self.q))

    def primitive_element(self) -> int:
        """Smallest element of multiplicative order q - 1."""
        n = self.q - 1
        primes = [p for p in range(2, n + 1)
                  if n % p == 0 and all(p % d for d in range(2, p))]
        for g in range(2 if self.q > 2 else 1, self.q):
            if all(self.pow(g, n // p) != 1 for p in primes):
                return g
        raise AssertionError("multiplicative group has no generator")

    def __call__(self, bits: int) -> FieldElement:
        return FieldElement(self, self._check(bits))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    bits: int

    def _same(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError("operands belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.field, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.field, self.field.mul(self.bits, other.bits))

    def __pow__(self, n: int) -> FieldElement:
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(self.field, self.field.pow(self.bits, n))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.bits))

    def sqrt(self) -> FieldElement:
        return FieldElement(self.field, self.field.sqrt(self.bits))

    def __int__(self) -> int:
        return self.bits

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"GF({self.field.q})({self.bits})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def sqrt(a: FieldElement) -> FieldElement:
    """The unique b with b*b == a (squaring is bijective in characteristic 2)."""
    return a.sqrt()


def frobenius(a: FieldElement) -> FieldElement:
    return a * a


def all_elements(spec: FieldSpec) -> list[FieldElement]:
    """All 2^e elements in ascending bit-encoding order."""
    return [FieldElement(spec, b) for b in range(spec.q)]
