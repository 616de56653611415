"""Presentation files and the expression language.

A presentation file holds, one per line, a field declaration, generator
lists, and two relation blocks:

    # comment
    field GF 2            (also: field Q, field GF(2))
    ygens y1 y2
    xgens x1 x2 x3
    rrels
      y1^2
    srels
      y2*x2 - y1*x1
      [x2,x1]

Later-listed generators are greater.  Expressions are sums of terms; a
term multiplies integer or n/m scalars, powered Y-names, and at most one
Lie factor (an X-name or a bracket [expr,expr]).  The rrels block allows
no Lie factors at all.
"""
from __future__ import annotations

import re

from .commutative import Poly, deglex_key
from .errors import PresentationError
from .field import Field
from .freelie import AssocElement, LieElement, assoc_term_key, lie_term_key
from .gsb_lie import LiePresentation

_KEYWORDS = {"field", "ygens", "xgens", "rrels", "srels"}
_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_TOKEN_RE = re.compile(r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[\[\],+\-*/^])")


def _tokenize(s: str, lineno):
    out = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(s, pos)
        if not m:
            raise PresentationError("unexpected character %r" % s[pos], lineno)
        if m.lastgroup == "int":
            out.append(("int", int(m.group())))
        elif m.lastgroup == "name":
            out.append(("name", m.group()))
        else:
            out.append(("sym", m.group()))
        pos = m.end()
    return out


class _ExprParser:
    """Recursive-descent parser shared by the commutative and Lie contexts."""

    def __init__(self, tokens, lineno, field: Field, yindex: dict, xindex: dict):
        self.tokens = tokens
        self.pos = 0
        self.lineno = lineno
        self.field = field
        self.yindex = yindex
        self.xindex = xindex
        self.ny = len(yindex)

    def error(self, msg):
        raise PresentationError(msg, self.lineno)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_sym(self, sym):
        kind, val = self.take()
        if kind != "sym" or val != sym:
            self.error("expected %r" % sym)

    def parse_terms(self):
        """Yield (coefficient, y-exponents, lie part or None) per term."""
        terms = []
        sign = 1
        kind, val = self.peek()
        if kind == "sym" and val == "-":
            self.take()
            sign = -1
        terms.append(self.parse_term(sign))
        while True:
            kind, val = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                terms.append(self.parse_term(1 if val == "+" else -1))
            else:
                break
        return terms

    def parse_term(self, sign):
        F = self.field
        coeff = F.of(sign)
        ym = [0] * self.ny
        lie = None
        while True:
            kind, val = self.peek()
            if kind == "int":
                self.take()
                num, den = val, 1
                k2, v2 = self.peek()
                if k2 == "sym" and v2 == "/":
                    self.take()
                    k3, v3 = self.take()
                    if k3 != "int":
                        self.error("expected an integer denominator")
                    den = v3
                try:
                    coeff = F.mul(coeff, F.of(num, den))
                except ZeroDivisionError as exc:
                    self.error(str(exc))
            elif kind == "name":
                self.take()
                exp = 1
                k2, v2 = self.peek()
                if k2 == "sym" and v2 == "^":
                    self.take()
                    k3, v3 = self.take()
                    if k3 != "int":
                        self.error("expected an integer exponent")
                    exp = v3
                if val in self.yindex:
                    ym[self.yindex[val]] += exp
                elif val in self.xindex:
                    if exp != 1:
                        self.error("cannot raise Lie generator %r to a power" % val)
                    lie = self._combine_lie(
                        lie, LieElement.generator(F, self.ny, self.xindex[val])
                    )
                else:
                    self.error("unknown generator %r" % val)
            elif kind == "sym" and val == "[":
                self.take()
                e1 = self._as_lie(self.parse_terms())
                self.expect_sym(",")
                e2 = self._as_lie(self.parse_terms())
                self.expect_sym("]")
                lie = self._combine_lie(lie, e1.bracket(e2))
            else:
                self.error("expected a factor")
            kind, val = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                continue
            return coeff, tuple(ym), lie

    def _combine_lie(self, old, new):
        if old is not None:
            self.error("cannot multiply two Lie factors")
        return new

    def _as_lie(self, terms) -> LieElement:
        F = self.field
        acc = LieElement.zero(F)
        for coeff, ym, lie in terms:
            if lie is None:
                self.error("a Lie expression needs a Lie factor in every term")
            acc = acc.add(lie.mul_ymono(ym, coeff))
        return acc

    def finish_lie(self) -> LieElement:
        if [t[0] for t in self.tokens] == ["int"] and self.tokens[0][1] == 0:
            self.pos = 1
            return LieElement.zero(self.field)
        terms = self.parse_terms()
        if self.pos != len(self.tokens):
            self.error("unexpected trailing input")
        return self._as_lie(terms)

    def finish_poly(self) -> Poly:
        F = self.field
        if [t[0] for t in self.tokens] == ["int"] and self.tokens[0][1] == 0:
            return Poly.zero(F)
        terms = self.parse_terms()
        if self.pos != len(self.tokens):
            self.error("unexpected trailing input")
        for _, _, lie in terms:
            if lie is not None:
                self.error("Lie factors are not allowed in the rrels block")
        return Poly.from_terms(F, ((ym, coeff) for coeff, ym, _ in terms))


def _parse_field(rest: str, lineno) -> Field:
    rest = rest.strip()
    if rest == "Q":
        return Field(0)
    m = re.fullmatch(r"GF\s*\(?\s*(\d+)\s*\)?", rest)
    if not m:
        raise PresentationError("cannot read field %r (use Q or GF <p>)" % rest, lineno)
    p = int(m.group(1))
    try:
        return Field(p)
    except Exception:
        raise PresentationError("GF(%d) needs a prime characteristic" % p, lineno)


def _check_names(names, lineno, what):
    seen = set()
    for n in names:
        if not _NAME_RE.match(n):
            raise PresentationError("bad %s name %r" % (what, n), lineno)
        if n in _KEYWORDS:
            raise PresentationError("%r is a reserved word" % n, lineno)
        if n in seen:
            raise PresentationError("duplicate %s name %r" % (what, n), lineno)
        seen.add(n)


def parse_presentation(text: str) -> LiePresentation:
    field = None
    ygens: list = []
    xgens: list = []
    rlines: list = []
    slines: list = []
    block = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()[0]
        if head == "field":
            field = _parse_field(line[5:], lineno)
            block = None
        elif head == "ygens":
            ygens = line.split()[1:]
            _check_names(ygens, lineno, "Y generator")
            block = None
        elif head == "xgens":
            xgens = line.split()[1:]
            _check_names(xgens, lineno, "X generator")
            block = None
        elif head == "rrels":
            if line != "rrels":
                raise PresentationError("rrels starts a block of its own", lineno)
            block = "r"
        elif head == "srels":
            if line != "srels":
                raise PresentationError("srels starts a block of its own", lineno)
            block = "s"
        elif block == "r":
            rlines.append((lineno, line))
        elif block == "s":
            slines.append((lineno, line))
        else:
            raise PresentationError("unexpected line %r" % line, lineno)
    if field is None:
        raise PresentationError("missing field declaration")
    if not xgens:
        raise PresentationError("missing xgens declaration")
    overlap = set(ygens) & set(xgens)
    if overlap:
        raise PresentationError("names %s appear in both ygens and xgens" % sorted(overlap))
    yindex = {n: i for i, n in enumerate(ygens)}
    xindex = {n: i + 1 for i, n in enumerate(xgens)}
    rrels = []
    for lineno, line in rlines:
        p = _ExprParser(_tokenize(line, lineno), lineno, field, yindex, xindex)
        r = p.finish_poly()
        if not r:
            raise PresentationError("relation is zero", lineno)
        rrels.append(r.monic())
    srels = []
    for lineno, line in slines:
        p = _ExprParser(_tokenize(line, lineno), lineno, field, yindex, xindex)
        s = p.finish_lie()
        if not s:
            raise PresentationError("relation is zero", lineno)
        srels.append(s.k_monic())
    return LiePresentation(field, ygens, rrels, xgens, srels)


def parse_presentation_file(path: str) -> LiePresentation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_presentation(fh.read())


def parse_lie_element(pres: LiePresentation, text: str) -> LieElement:
    yindex = {n: i for i, n in enumerate(pres.ygens)}
    xindex = {n: i + 1 for i, n in enumerate(pres.xgens)}
    p = _ExprParser(_tokenize(text, None), None, pres.field, yindex, xindex)
    return p.finish_lie()


def parse_poly_element(pres: LiePresentation, text: str) -> Poly:
    yindex = {n: i for i, n in enumerate(pres.ygens)}
    xindex = {n: i + 1 for i, n in enumerate(pres.xgens)}
    p = _ExprParser(_tokenize(text, None), None, pres.field, yindex, xindex)
    return p.finish_poly()


# ---------------------------------------------------------------------------
# Rendering


def fmt_ymono(ym: tuple, ygens) -> str:
    parts = []
    for i in range(len(ym) - 1, -1, -1):
        e = ym[i]
        if e == 1:
            parts.append(ygens[i])
        elif e > 1:
            parts.append("%s^%d" % (ygens[i], e))
    return "*".join(parts)


def fmt_tree(t, xgens) -> str:
    if isinstance(t, int):
        return xgens[t - 1]
    return "[%s,%s]" % (fmt_tree(t[0], xgens), fmt_tree(t[1], xgens))


def fmt_word(w: tuple, xgens) -> str:
    if not w:
        return "1"
    return "*".join(xgens[i - 1] for i in w)


def _signed_join(field: Field, parts) -> str:
    out = []
    for k, (coeff, body) in enumerate(parts):
        neg = field.char == 0 and coeff < 0
        mag = -coeff if neg else coeff
        cs = field.fmt(mag)
        if body:
            s = body if cs == "1" else "%s*%s" % (cs, body)
        else:
            s = cs
        if k == 0:
            out.append("-" + s if neg else s)
        else:
            out.append((" - " if neg else " + ") + s)
    return "".join(out)


def fmt_poly(p: Poly, ygens) -> str:
    if not p:
        return "0"
    keys = sorted(p.terms, key=deglex_key, reverse=True)
    return _signed_join(
        p.field, [(p.terms[m], fmt_ymono(m, ygens)) for m in keys]
    )


def fmt_lie(e: LieElement, ygens, xgens) -> str:
    if not e:
        return "0"
    keys = sorted(e.terms, key=lie_term_key, reverse=True)
    parts = []
    for ym, t in keys:
        body = "*".join(x for x in (fmt_ymono(ym, ygens), fmt_tree(t, xgens)) if x)
        parts.append((e.terms[(ym, t)], body))
    return _signed_join(e.field, parts)


def fmt_assoc(e: AssocElement, ygens, xgens) -> str:
    if not e:
        return "0"
    keys = sorted(e.terms, key=assoc_term_key, reverse=True)
    parts = []
    for ym, w in keys:
        ys = fmt_ymono(ym, ygens)
        ws = fmt_word(w, xgens) if w else ""
        body = "*".join(x for x in (ys, ws) if x)
        parts.append((e.terms[(ym, w)], body))
    return _signed_join(e.field, parts)


def fmt_lie_monomial(ym: tuple, tree, ygens, xgens) -> str:
    body = "*".join(x for x in (fmt_ymono(ym, ygens), fmt_tree(tree, xgens)) if x)
    return body or "1"


def fmt_assoc_monomial(ym: tuple, w: tuple, ygens, xgens) -> str:
    ys = fmt_ymono(ym, ygens)
    ws = fmt_word(w, xgens) if w else ""
    body = "*".join(x for x in (ys, ws) if x)
    return body or "1"


def fmt_field(field: Field) -> str:
    return "Q" if field.char == 0 else "GF %d" % field.char


def fmt_presentation(pres) -> str:
    """Render a presentation back into the file format (srels for Lie
    presentations, arels for associative ones)."""
    lines = ["field %s" % fmt_field(pres.field)]
    if pres.ygens:
        lines.append("ygens " + " ".join(pres.ygens))
    lines.append("xgens " + " ".join(pres.xgens))
    if pres.rrels:
        lines.append("rrels")
        for r in pres.rrels:
            lines.append("  " + fmt_poly(r, pres.ygens))
    if hasattr(pres, "srels"):
        if pres.srels:
            lines.append("srels")
            for s in pres.srels:
                lines.append("  " + fmt_lie(s, pres.ygens, pres.xgens))
    elif pres.arels:
        lines.append("arels")
        for s in pres.arels:
            lines.append("  " + fmt_assoc(s, pres.ygens, pres.xgens))
    return "\n".join(lines) + "\n"
