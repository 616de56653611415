"""Coefficient fields: the rationals and prime fields GF(p).

Scalars are kept as raw canonical values (reduced Fraction for Q, an int
residue in 0..p-1 for GF(p)) so that hot arithmetic loops stay cheap.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import LieGsbError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (char == 0) or a prime field GF(p) (char == p)."""

    __slots__ = ("char",)

    def __init__(self, char: int = 0):
        if char != 0 and not _is_prime(char):
            raise LieGsbError("field characteristic must be 0 or a prime, got %r" % (char,))
        self.char = char

    def __repr__(self):
        return "Field(0)" if self.char == 0 else "Field(%d)" % self.char

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    @property
    def zero(self):
        return 0 if self.char else Fraction(0)

    @property
    def one(self):
        return 1 if self.char else Fraction(1)

    def of(self, num, den: int = 1):
        """Coerce an integer or num/den pair into a canonical scalar."""
        p = self.char
        if p == 0:
            return Fraction(num, den)
        if den % p == 0:
            raise ZeroDivisionError("denominator %d is zero in GF(%d)" % (den, p))
        v = (num % p) * pow(den % p, -1, p) % p
        return v

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.char) if self.char else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def fmt(self, a) -> str:
        """Render a scalar the way presentation files write them."""
        if self.char:
            return str(a)
        if a.denominator == 1:
            return str(a.numerator)
        return "%d/%d" % (a.numerator, a.denominator)


QQ = Field(0)
