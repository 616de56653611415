"""Commutative polynomials k[Y] with the degree-lexicographic order.

Monomials are dense exponent tuples.  Within one degree, the later-listed
(higher-indexed) generator is the more significant one, so e.g. with
Y = (y1, y2, y3) we get y1*y3 > y2^2.
"""
from __future__ import annotations

from itertools import product as _product
from typing import Iterable

from .errors import BudgetExceededError
from .field import Field


def one(n: int) -> tuple:
    return (0,) * n


def degree(m: tuple) -> int:
    return sum(m)


def deglex_key(m: tuple):
    """Sort key: total degree first, then exponents from the top generator down."""
    return (sum(m), m[::-1])


def compare(m1: tuple, m2: tuple) -> int:
    k1, k2 = deglex_key(m1), deglex_key(m2)
    return (k1 > k2) - (k1 < k2)


def mul(m1: tuple, m2: tuple) -> tuple:
    return tuple(a + b for a, b in zip(m1, m2))


def divides(m1: tuple, m2: tuple) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def quotient(m2: tuple, m1: tuple) -> tuple:
    """m2 / m1, assuming m1 divides m2."""
    return tuple(b - a for a, b in zip(m1, m2))


def lcm(m1: tuple, m2: tuple) -> tuple:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def gcd(m1: tuple, m2: tuple) -> tuple:
    return tuple(min(a, b) for a, b in zip(m1, m2))


def enumerate_monomials(n: int, max_deg: int) -> list:
    """All exponent tuples of n variables with total degree <= max_deg, deg-lex ascending."""
    out = [m for m in _product(range(max_deg + 1), repeat=n) if sum(m) <= max_deg]
    out.sort(key=deglex_key)
    return out


class Poly:
    """A polynomial in k[Y]: a field plus a monomial -> coefficient map."""

    __slots__ = ("field", "terms", "_lead")

    def __init__(self, field: Field, terms: dict):
        self.field = field
        self.terms = terms
        self._lead = None

    @classmethod
    def from_terms(cls, field: Field, terms: Iterable) -> "Poly":
        acc: dict = {}
        for mono, coeff in terms:
            c = field.add(acc.get(mono, field.zero), coeff)
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        return cls(field, acc)

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, {})

    @classmethod
    def constant(cls, field: Field, n: int, value) -> "Poly":
        v = field.of(value) if isinstance(value, int) else value
        return cls(field, {one(n): v} if v else {})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return "Poly(%r)" % (self.terms,)

    def leading(self):
        """(coefficient, monomial) of the deglex-greatest term."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            m = max(self.terms, key=deglex_key)
            self._lead = (self.terms[m], m)
        return self._lead

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        c, _ = self.leading()
        if c == self.field.one:
            return self
        inv = self.field.inv(c)
        F = self.field
        return Poly(F, {m: F.mul(inv, v) for m, v in self.terms.items()})

    def add(self, other: "Poly") -> "Poly":
        F = self.field
        acc = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(acc.get(m, F.zero), c)
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Poly(F, acc)

    def neg(self) -> "Poly":
        F = self.field
        return Poly(F, {m: F.neg(c) for m, c in self.terms.items()})

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def scale(self, coeff) -> "Poly":
        F = self.field
        if not coeff:
            return Poly(F, {})
        return Poly(F, {m: F.mul(coeff, c) for m, c in self.terms.items()})

    def mul_term(self, mono: tuple, coeff) -> "Poly":
        F = self.field
        if not coeff:
            return Poly(F, {})
        return Poly(F, {mul(m, mono): F.mul(coeff, c) for m, c in self.terms.items()})

    def mul(self, other: "Poly") -> "Poly":
        F = self.field
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mul(m1, m2)
                v = F.add(acc.get(m, F.zero), F.mul(c1, c2))
                if v:
                    acc[m] = v
                else:
                    acc.pop(m, None)
        return Poly(F, acc)


def normal_form(p: Poly, basis: list) -> Poly:
    """Fully divide p by the basis; the result has no term divisible by any leading monomial."""
    F = p.field
    work = dict(p.terms)
    remainder: dict = {}
    leads = [(g.leading(), g) for g in basis if g]
    while work:
        m = max(work, key=deglex_key)
        c = work.pop(m)
        hit = None
        for (gc, gm), g in leads:
            if divides(gm, m):
                hit = (gc, gm, g)
                break
        if hit is None:
            remainder[m] = c
            continue
        gc, gm, g = hit
        factor = F.neg(F.div(c, gc))
        q = quotient(m, gm)
        for gm2, gc2 in g.terms.items():
            if gm2 == gm:
                continue
            mm = mul(gm2, q)
            v = F.add(work.get(mm, F.zero), F.mul(factor, gc2))
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Poly(F, remainder)


def s_poly(f: Poly, g: Poly) -> Poly:
    F = f.field
    fc, fm = f.leading()
    gc, gm = g.leading()
    L = lcm(fm, gm)
    left = f.mul_term(quotient(L, fm), F.inv(fc))
    right = g.mul_term(quotient(L, gm), F.inv(gc))
    return left.sub(right)


def interreduce(polys: list) -> list:
    """Reduce each element against the others until stable; monic, sorted output."""
    work = [p for p in polys if p]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            rest = work[:i] + work[i + 1 :]
            r = normal_form(work[i], rest)
            if r.terms != work[i].terms:
                changed = True
                if r:
                    work[i] = r
                else:
                    work.pop(i)
                break
    work = [p.monic() for p in work]
    work.sort(key=lambda p: deglex_key(p.leading()[1]))
    return work


def buchberger(polys: list, max_deg=None, max_elements: int = 2000) -> list:
    """Complete a generating set to a Groebner basis; interreduced, monic, sorted.

    max_deg, when given, skips critical pairs whose lcm degree exceeds it.
    """
    basis = [p.monic() for p in polys if p]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        fm = basis[i].leading()[1]
        gm = basis[j].leading()[1]
        L = lcm(fm, gm)
        if L == mul(fm, gm):
            continue
        if max_deg is not None and sum(L) > max_deg:
            continue
        r = normal_form(s_poly(basis[i], basis[j]), basis)
        if r:
            basis.append(r.monic())
            k = len(basis) - 1
            if k + 1 > max_elements:
                raise BudgetExceededError(
                    "commutative completion exceeded %d elements" % max_elements
                )
            pairs.extend((k, t) for t in range(k))
    return interreduce(basis)


def is_groebner(polys: list, max_deg=None) -> bool:
    basis = [p for p in polys if p]
    for i in range(len(basis)):
        for j in range(i):
            fm = basis[i].leading()[1]
            gm = basis[j].leading()[1]
            L = lcm(fm, gm)
            if L == mul(fm, gm):
                continue
            if max_deg is not None and sum(L) > max_deg:
                continue
            if normal_form(s_poly(basis[i], basis[j]), basis):
                return False
    return True
