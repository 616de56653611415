"""Free Lie algebra and free associative algebra over a polynomial ring k[Y].

A Lie element is stored as a map (y-monomial, NLSW tree) -> coefficient;
an associative element as (y-monomial, X-word) -> coefficient.  Terms are
ordered X-part first (deg-lex on the foliage), then by the y-monomial.
Brackets of basis trees are rewritten into NLSW combinations over the
integers once and cached, independent of the coefficient field.
"""
from __future__ import annotations

from functools import lru_cache

from . import commutative as cm
from .errors import NotLieElementError, ZeroElementError
from .field import Field
from .words import deglex_key, expand_z, foliage, is_alsw, is_nlsw, std_bracketing


def lie_term_key(key):
    ym, t = key
    w = foliage(t)
    return ((len(w), w), (sum(ym), ym[::-1]))


def assoc_term_key(key):
    ym, w = key
    return ((len(w), w), (sum(ym), ym[::-1]))


def peel_z(d: dict) -> dict:
    """Rewrite an integer word-combination into standard-bracketing trees."""
    work = dict(d)
    out: dict = {}
    while work:
        m = max(work, key=deglex_key)
        if not is_alsw(m):
            raise NotLieElementError("leading word %r is not an ALSW" % (m,))
        c = work[m]
        t = std_bracketing(m)
        out[t] = c
        for w2, z2 in expand_z(t).items():
            v = work.get(w2, 0) - c * z2
            if v:
                work[w2] = v
            else:
                work.pop(w2, None)
    return out


def peel_field(field: Field, d: dict) -> dict:
    """Field-coefficient version of peel_z; raises when d is not a Lie combination."""
    work = dict(d)
    out: dict = {}
    while work:
        m = max(work, key=deglex_key)
        if not is_alsw(m):
            raise NotLieElementError("leading word %r is not an ALSW" % (m,))
        c = work[m]
        t = std_bracketing(m)
        out[t] = c
        for w2, z2 in expand_z(t).items():
            v = field.sub(work.get(w2, field.zero), field.mul(c, field.of(z2)))
            if v:
                work[w2] = v
            else:
                work.pop(w2, None)
    return out


@lru_cache(maxsize=None)
def basis_bracket_z(t1, t2) -> dict:
    """[t1, t2] as an integer combination of NLSW trees.  Treat as read-only."""
    e1, e2 = expand_z(t1), expand_z(t2)
    d: dict = {}
    for u, a in e1.items():
        for v, b in e2.items():
            ab = a * b
            for w, s in ((u + v, ab), (v + u, -ab)):
                c = d.get(w, 0) + s
                if c:
                    d[w] = c
                else:
                    d.pop(w, None)
    return peel_z(d)


@lru_cache(maxsize=None)
def nlsw_decompose_z(t) -> dict:
    """An arbitrary bracketing tree as an integer combination of NLSW trees."""
    if is_nlsw(t):
        return {t: 1}
    return peel_z(expand_z(t))


class LieElement:
    """A k[Y]-combination of NLSW trees."""

    __slots__ = ("field", "terms", "_lead")

    def __init__(self, field: Field, terms: dict):
        self.field = field
        self.terms = terms
        self._lead = None

    @classmethod
    def from_terms(cls, field: Field, items) -> "LieElement":
        acc: dict = {}
        for key, coeff in items:
            v = field.add(acc.get(key, field.zero), coeff)
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return cls(field, acc)

    @classmethod
    def zero(cls, field: Field) -> "LieElement":
        return cls(field, {})

    @classmethod
    def generator(cls, field: Field, ny: int, i: int) -> "LieElement":
        return cls(field, {((0,) * ny, i): field.one})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, LieElement)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return "LieElement(%r)" % (self.terms,)

    def add(self, other: "LieElement") -> "LieElement":
        F = self.field
        acc = dict(self.terms)
        for key, c in other.terms.items():
            v = F.add(acc.get(key, F.zero), c)
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return LieElement(F, acc)

    def neg(self) -> "LieElement":
        F = self.field
        return LieElement(F, {k: F.neg(c) for k, c in self.terms.items()})

    def sub(self, other: "LieElement") -> "LieElement":
        return self.add(other.neg())

    def scale(self, coeff) -> "LieElement":
        F = self.field
        if not coeff:
            return LieElement(F, {})
        return LieElement(F, {k: F.mul(coeff, c) for k, c in self.terms.items()})

    def mul_ymono(self, mono: tuple, coeff) -> "LieElement":
        """Multiply by coeff * Y^mono."""
        F = self.field
        if not coeff:
            return LieElement(F, {})
        return LieElement(
            F,
            {
                (cm.mul(ym, mono), t): F.mul(coeff, c)
                for (ym, t), c in self.terms.items()
            },
        )

    def bracket(self, other: "LieElement") -> "LieElement":
        F = self.field
        acc: dict = {}
        for (m1, t1), c1 in self.terms.items():
            for (m2, t2), c2 in other.terms.items():
                cc = F.mul(c1, c2)
                mm = cm.mul(m1, m2)
                for t, z in basis_bracket_z(t1, t2).items():
                    key = (mm, t)
                    v = F.add(acc.get(key, F.zero), F.mul(cc, F.of(z)))
                    if v:
                        acc[key] = v
                    else:
                        acc.pop(key, None)
        return LieElement(F, acc)

    def leading(self):
        """(coefficient, (y-monomial, tree)) of the greatest term."""
        if self._lead is None:
            if not self.terms:
                raise ZeroElementError("zero element has no leading term")
            key = max(self.terms, key=lie_term_key)
            self._lead = (self.terms[key], key)
        return self._lead

    def leading_word(self):
        """(y-monomial, foliage word) of the leading term."""
        _, (ym, t) = self.leading()
        return ym, foliage(t)

    def k_monic(self) -> "LieElement":
        c, _ = self.leading()
        if c == self.field.one:
            return self
        return self.scale(self.field.inv(c))

    def leading_tree_poly(self):
        """The greatest tree appearing, with its full k[Y] coefficient."""
        if not self.terms:
            raise ZeroElementError("zero element has no leading tree")
        trees = {t for (_, t) in self.terms}
        top = max(trees, key=lambda t: deglex_key(foliage(t)))
        poly = {ym: c for (ym, t), c in self.terms.items() if t == top}
        return top, poly

    def is_ky_monic(self) -> bool:
        """True when the k[Y] coefficient of the greatest tree is the constant 1."""
        top, poly = self.leading_tree_poly()
        ny = len(next(iter(self.terms))[0])
        return poly == {(0,) * ny: self.field.one}

    def x_degree(self) -> int:
        if not self.terms:
            return 0
        return max(len(foliage(t)) for (_, t) in self.terms)

    def y_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(ym) for (ym, _) in self.terms)

    def to_associative(self) -> "AssocElement":
        F = self.field
        acc: dict = {}
        for (ym, t), c in self.terms.items():
            for w, z in expand_z(t).items():
                key = (ym, w)
                v = F.add(acc.get(key, F.zero), F.mul(c, F.of(z)))
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return AssocElement(F, acc)


class AssocElement:
    """A k[Y]-combination of words in the free associative algebra."""

    __slots__ = ("field", "terms", "_lead")

    def __init__(self, field: Field, terms: dict):
        self.field = field
        self.terms = terms
        self._lead = None

    @classmethod
    def from_terms(cls, field: Field, items) -> "AssocElement":
        acc: dict = {}
        for key, coeff in items:
            v = field.add(acc.get(key, field.zero), coeff)
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return cls(field, acc)

    @classmethod
    def zero(cls, field: Field) -> "AssocElement":
        return cls(field, {})

    @classmethod
    def generator(cls, field: Field, ny: int, i: int) -> "AssocElement":
        return cls(field, {((0,) * ny, (i,)): field.one})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, AssocElement)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return "AssocElement(%r)" % (self.terms,)

    def add(self, other: "AssocElement") -> "AssocElement":
        F = self.field
        acc = dict(self.terms)
        for key, c in other.terms.items():
            v = F.add(acc.get(key, F.zero), c)
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
        return AssocElement(F, acc)

    def neg(self) -> "AssocElement":
        F = self.field
        return AssocElement(F, {k: F.neg(c) for k, c in self.terms.items()})

    def sub(self, other: "AssocElement") -> "AssocElement":
        return self.add(other.neg())

    def scale(self, coeff) -> "AssocElement":
        F = self.field
        if not coeff:
            return AssocElement(F, {})
        return AssocElement(F, {k: F.mul(coeff, c) for k, c in self.terms.items()})

    def mul_ymono(self, mono: tuple, coeff) -> "AssocElement":
        F = self.field
        if not coeff:
            return AssocElement(F, {})
        return AssocElement(
            F,
            {
                (cm.mul(ym, mono), w): F.mul(coeff, c)
                for (ym, w), c in self.terms.items()
            },
        )

    def mul(self, other: "AssocElement") -> "AssocElement":
        F = self.field
        acc: dict = {}
        for (m1, w1), c1 in self.terms.items():
            for (m2, w2), c2 in other.terms.items():
                key = (cm.mul(m1, m2), w1 + w2)
                v = F.add(acc.get(key, F.zero), F.mul(c1, c2))
                if v:
                    acc[key] = v
                else:
                    acc.pop(key, None)
        return AssocElement(F, acc)

    def leading(self):
        if self._lead is None:
            if not self.terms:
                raise ZeroElementError("zero element has no leading term")
            key = max(self.terms, key=assoc_term_key)
            self._lead = (self.terms[key], key)
        return self._lead

    def k_monic(self) -> "AssocElement":
        c, _ = self.leading()
        if c == self.field.one:
            return self
        return self.scale(self.field.inv(c))

    def x_degree(self) -> int:
        if not self.terms:
            return 0
        return max(len(w) for (_, w) in self.terms)

    def y_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(ym) for (ym, _) in self.terms)


def from_associative(a: AssocElement) -> LieElement:
    """Rewrite an associative element as a Lie element, when possible."""
    F = a.field
    groups: dict = {}
    for (ym, w), c in a.terms.items():
        groups.setdefault(ym, {})[w] = c
    acc: dict = {}
    for ym, wdict in groups.items():
        for t, c in peel_field(F, wdict).items():
            acc[(ym, t)] = c
    return LieElement(F, acc)
