"""Scalar rings: rationals come from :mod:`fractions`; a small prime field lives here."""
from __future__ import annotations

from fractions import Fraction

# Largest prime below 2**62.
DEFAULT_PRIME = 2**62 - 57


class PrimeFieldElem:
    """Residue modulo a prime ``p``; mixes freely with ``int`` and ``Fraction``."""

    __slots__ = ("v", "p")

    def __init__(self, value, p: int = DEFAULT_PRIME):
        self.p = p
        if isinstance(value, PrimeFieldElem):
            self.v = value.v % p
        elif isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes modulo p")
            self.v = value.numerator * pow(den, -1, p) % p
        else:
            self.v = int(value) % p

    def _coerce(self, other) -> "PrimeFieldElem":
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise ValueError("prime mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return PrimeFieldElem(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(self.v + o.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(self.v - o.v, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(o.v - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElem(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.v, self.p)

    def inverse(self) -> "PrimeFieldElem":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return PrimeFieldElem(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElem(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, PrimeFieldElem)):
            o = self._coerce(other)
            return self.v == o.v
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"GF({self.v})"


def is_zero(x) -> bool:
    return x == 0


def exact_div(a, b):
    """a / b where the quotient is known to be exact in the ring of ``a``."""
    from .poly import SparsePoly
    if isinstance(a, SparsePoly) or isinstance(b, SparsePoly):
        if not isinstance(a, SparsePoly):
            a = b.const(a)
        return a.divexact(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            return Fraction(a, b)
        return q
    if isinstance(a, PrimeFieldElem) or isinstance(b, PrimeFieldElem):
        return a / b
    return Fraction(a) / b
