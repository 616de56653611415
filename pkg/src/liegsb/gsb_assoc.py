"""Groebner-Shirshov machinery for associative algebras over k[Y].

Rules are k-monic associative elements; reduction rewrites a term whose
word contains a rule's leading word (with divisible y-part) using the
two-sided context product, so no bracketing gymnastics are needed here.

Unlike the Lie engine, completion here interreduces the final basis by
default: every rule is reduced against the others until nothing changes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import commutative as cm
from .errors import BudgetExceededError, CompositionError, LieGsbError
from .field import Field
from .freelie import AssocElement, assoc_term_key
from .gsb_lie import Caps, Completion, GsbReport, _map_ordered


@dataclass
class AssocComposition:
    """One associative composition; for the external kind, b holds the
    connecting word between the two leading words."""

    kind: str
    i: int
    j: Optional[int]
    a: tuple
    b: tuple
    w: tuple
    value: Optional[AssocElement] = None


def _ctx(g: AssocElement, q: tuple, a: tuple, b: tuple) -> AssocElement:
    """a * (g * Y^q) * b as an associative element."""
    F = g.field
    return AssocElement(
        F, {(cm.mul(ym, q), a + w + b): c for (ym, w), c in g.terms.items()}
    )


class AssocRuleSet:
    """An indexed list of k-monic associative rules supporting reduction."""

    def __init__(self, field: Field, ny: int, nx: int):
        self.field = field
        self.ny = ny
        self.nx = nx
        self.rules: list = []
        self._leads: list = []
        self._index: dict = {}

    def add(self, e: AssocElement, dedupe: bool = True) -> bool:
        if not e:
            return False
        e = e.k_monic()
        if dedupe and any(r.terms == e.terms for r in self.rules):
            return False
        rid = len(self.rules)
        self.rules.append(e)
        sy, sx = e.leading()[1]
        self._leads.append((sy, sx))
        self._index.setdefault(sx, []).append(rid)
        return True

    def _find_divisor(self, w: tuple, ym: tuple, policy: str, skip=None):
        matches = []
        n = len(w)
        for length in range(1, n + 1):
            for p in range(0, n - length + 1):
                for rid in self._index.get(w[p : p + length], ()):
                    if rid == skip:
                        continue
                    if cm.divides(self._leads[rid][0], ym):
                        matches.append((rid, p))
        if not matches:
            return None
        if policy == "first":
            return min(matches)
        if policy != "greatest":
            raise LieGsbError("unknown reduction policy %r" % (policy,))

        def greatest_key(m):
            rid, p = m
            sy, sx = self._leads[rid]
            return (((len(sx), sx), (sum(sy), sy[::-1])), -rid, -p)

        return max(matches, key=greatest_key)

    def reduce(
        self, e: AssocElement, policy: str = "first", trace=None, skip=None
    ) -> AssocElement:
        F = self.field
        work = dict(e.terms)
        rem: dict = {}
        while work:
            key = max(work, key=assoc_term_key)
            ym, w = key
            hit = self._find_divisor(w, ym, policy, skip=skip)
            if hit is None:
                rem[key] = work.pop(key)
                continue
            rid, p = hit
            sy, sx = self._leads[rid]
            q = cm.quotient(ym, sy)
            a, b = w[:p], w[p + len(sx) :]
            coeff = work[key]
            if trace is not None:
                trace.append((coeff, q, rid, a, b))
            for (ym2, w2), c2 in self.rules[rid].terms.items():
                k2 = (cm.mul(ym2, q), a + w2 + b)
                v = F.sub(work.get(k2, F.zero), F.mul(coeff, c2))
                if v:
                    work[k2] = v
                else:
                    work.pop(k2, None)
        return AssocElement(F, rem)

    def reducible_key(self, ym: tuple, w: tuple) -> bool:
        return self._find_divisor(w, ym, "first") is not None


def _ruleset(field, ny, nx, elements) -> AssocRuleSet:
    rs = AssocRuleSet(field, ny, nx)
    for e in elements:
        rs.add(e)
    return rs


# ---------------------------------------------------------------------------
# Composition builders (validated, standalone)


def assoc_comp_inclusion(f: AssocElement, g: AssocElement, pos: int):
    f, g = f.k_monic(), g.k_monic()
    fy, fx = f.leading()[1]
    gy, gx = g.leading()[1]
    if fx[pos : pos + len(gx)] != gx:
        raise CompositionError(
            "leading word %r does not occur at %d of %r" % (gx, pos, fx)
        )
    if f.terms == g.terms and pos == 0 and len(gx) == len(fx):
        raise CompositionError("a rule has no inclusion composition with itself")
    L = cm.lcm(fy, gy)
    F = f.field
    left = f.mul_ymono(cm.quotient(L, fy), F.one)
    right = _ctx(g, cm.quotient(L, gy), fx[:pos], fx[pos + len(gx) :])
    return left.sub(right), (L, fx)


def assoc_comp_intersection(f: AssocElement, g: AssocElement, overlap: int):
    f, g = f.k_monic(), g.k_monic()
    fy, fx = f.leading()[1]
    gy, gx = g.leading()[1]
    if not (0 < overlap < len(fx) and overlap < len(gx)):
        raise CompositionError("overlap length %d is not proper" % overlap)
    if fx[len(fx) - overlap :] != gx[:overlap]:
        raise CompositionError("leading words do not overlap by %d" % overlap)
    a, b = fx[: len(fx) - overlap], gx[overlap:]
    L = cm.lcm(fy, gy)
    F = f.field
    left = _ctx(f, cm.quotient(L, fy), (), b)
    right = _ctx(g, cm.quotient(L, gy), a, ())
    return left.sub(right), (L, fx + b)


def assoc_comp_external(f: AssocElement, g: AssocElement, t: tuple):
    """Connect the two leading words by the word t; needs a common variable
    in the leading y-monomials."""
    f, g = f.k_monic(), g.k_monic()
    fy, fx = f.leading()[1]
    gy, gx = g.leading()[1]
    if not any(cm.gcd(fy, gy)):
        raise CompositionError("leading y-monomials are coprime")
    L = cm.lcm(fy, gy)
    left = _ctx(f, cm.quotient(L, fy), (), tuple(t) + gx)
    right = _ctx(g, cm.quotient(L, gy), fx + tuple(t), ())
    return left.sub(right), (L, fx + tuple(t) + gx)


def assoc_comp_multiplication(f: AssocElement, letter: int, side: str):
    """f multiplied by a single generator on the given side ('left'/'right')."""
    f = f.k_monic()
    fy, fx = f.leading()[1]
    if not any(fy):
        raise CompositionError(
            "multiplication compositions need a nontrivial leading y-monomial"
        )
    ny = len(next(iter(f.terms))[0])
    q = (0,) * ny
    if side == "left":
        return _ctx(f, q, (letter,), ()), (fy, (letter,) + fx)
    if side == "right":
        return _ctx(f, q, (), (letter,)), (fy, fx + (letter,))
    raise CompositionError("side must be 'left' or 'right'")


# ---------------------------------------------------------------------------
# Enumeration and the engine


def enumerate_assoc_compositions(rs: AssocRuleSet, caps: Caps):
    records: list = []
    skipped = 0
    leads = rs._leads
    n_rules = len(rs.rules)
    alphabet = range(1, rs.nx + 1)

    for i in range(n_rules):
        fy, fx = leads[i]
        for length in range(1, len(fx) + 1):
            for p in range(0, len(fx) - length + 1):
                for j in rs._index.get(fx[p : p + length], ()):
                    if j == i and p == 0 and length == len(fx):
                        continue
                    L = cm.lcm(fy, leads[j][0])
                    if len(fx) > caps.max_x_deg or sum(L) > caps.max_y_deg:
                        skipped += 1
                        continue
                    records.append(
                        AssocComposition(
                            "inclusion", i, j, fx[:p], fx[p + length :], (L, fx)
                        )
                    )

    prefixes: dict = {}
    for j in range(n_rules):
        gx = leads[j][1]
        for t in range(1, len(gx)):
            prefixes.setdefault(gx[:t], []).append(j)
    for i in range(n_rules):
        fy, fx = leads[i]
        for t in range(1, len(fx)):
            for j in prefixes.get(fx[len(fx) - t :], ()):
                gy, gx = leads[j]
                w = fx + gx[t:]
                L = cm.lcm(fy, gy)
                if len(w) > caps.max_x_deg or sum(L) > caps.max_y_deg:
                    skipped += 1
                    continue
                records.append(
                    AssocComposition(
                        "intersection", i, j, fx[: len(fx) - t], gx[t:], (L, w)
                    )
                )

    ylead = [i for i in range(n_rules) if any(leads[i][0])]
    for i in ylead:
        fy, fx = leads[i]
        for j in ylead:
            gy, gx = leads[j]
            if not any(cm.gcd(fy, gy)):
                continue
            skipped += 1
            L = cm.lcm(fy, gy)
            if sum(L) > caps.max_y_deg:
                continue
            room = caps.max_x_deg - len(fx) - len(gx)
            if room < 0:
                continue
            for total in range(0, room + 1):
                for t in product(alphabet, repeat=total):
                    records.append(
                        AssocComposition("external", i, j, (), t, (L, fx + t + gx))
                    )

    for i in ylead:
        fy, fx = leads[i]
        if len(fx) + 1 > caps.max_x_deg:
            skipped += 1
            continue
        for letter in alphabet:
            records.append(
                AssocComposition(
                    "mul-left", i, None, (letter,), (), (fy, (letter,) + fx)
                )
            )
            records.append(
                AssocComposition(
                    "mul-right", i, None, (), (letter,), (fy, fx + (letter,))
                )
            )

    return records, skipped


def _comp_value(rs: AssocRuleSet, comp: AssocComposition) -> AssocElement:
    F = rs.field
    i = comp.i
    fy, fx = rs._leads[i]
    one_q = (0,) * rs.ny
    if comp.kind == "mul-left":
        return _ctx(rs.rules[i], one_q, comp.a, ())
    if comp.kind == "mul-right":
        return _ctx(rs.rules[i], one_q, (), comp.b)
    j = comp.j
    gy, gx = rs._leads[j]
    L = comp.w[0]
    qf, qg = cm.quotient(L, fy), cm.quotient(L, gy)
    if comp.kind == "inclusion":
        return rs.rules[i].mul_ymono(qf, F.one).sub(
            _ctx(rs.rules[j], qg, comp.a, comp.b)
        )
    if comp.kind == "intersection":
        return _ctx(rs.rules[i], qf, (), comp.b).sub(_ctx(rs.rules[j], qg, comp.a, ()))
    return _ctx(rs.rules[i], qf, (), comp.b + gx).sub(
        _ctx(rs.rules[j], qg, fx + comp.b, ())
    )


def _fits(e: AssocElement, caps: Caps) -> bool:
    return e.x_degree() <= caps.max_x_deg and e.y_degree() <= caps.max_y_deg


def assoc_is_gsb(
    field, ny, nx, elements, caps: Caps, policy: str = "first", jobs: int = 1
) -> GsbReport:
    rs = _ruleset(field, ny, nx, elements)
    records, skipped = enumerate_assoc_compositions(rs, caps)
    failures, overcap = [], []

    def work(rec):
        return rs.reduce(_comp_value(rs, rec), policy=policy)

    for rec, rem in zip(records, _map_ordered(work, records, jobs)):
        if not rem:
            continue
        if _fits(rem, caps):
            failures.append((rec, rem))
        else:
            overcap.append((rec, rem))
    return GsbReport(not failures, len(records), skipped, failures, overcap)


def interreduce(field, ny, nx, elements, policy: str = "first") -> list:
    """Reduce every element against the others until stable; monic, ascending."""
    elems = [e.k_monic() for e in elements if e]
    deduped = []
    for e in elems:
        if not any(e.terms == s.terms for s in deduped):
            deduped.append(e)
    elems = deduped
    while True:
        rs = AssocRuleSet(field, ny, nx)
        for e in elems:
            rs.add(e, dedupe=False)
        changed = False
        for idx in range(len(elems)):
            r2 = rs.reduce(elems[idx], policy=policy, skip=idx)
            if r2.terms != elems[idx].terms:
                if r2:
                    elems[idx] = r2.k_monic()
                else:
                    elems.pop(idx)
                changed = True
                break
        if not changed:
            break
    elems.sort(key=lambda e: assoc_term_key(e.leading()[1]))
    return elems


def assoc_complete(
    field,
    ny,
    nx,
    elements,
    caps: Caps,
    policy: str = "first",
    jobs: int = 1,
    interreduce_final: bool = True,
) -> Completion:
    rs = _ruleset(field, ny, nx, elements)
    if len(rs.rules) > caps.max_elements:
        raise BudgetExceededError(
            "input already has more than %d rules" % caps.max_elements
        )
    total_adjoined = 0
    for round_no in range(1, caps.max_rounds + 1):
        records, skipped = enumerate_assoc_compositions(rs, caps)
        discarded = 0
        cands = []

        def work(rec):
            return rs.reduce(_comp_value(rs, rec), policy=policy)

        for rem in _map_ordered(work, records, jobs):
            if not rem:
                continue
            if not _fits(rem, caps):
                discarded += 1
                continue
            cands.append(rem)
        cands.sort(key=lambda e: assoc_term_key(e.leading()[1]))
        adjoined_now = 0
        for rem in cands:
            r2 = rs.reduce(rem, policy=policy)
            if not r2:
                continue
            if not _fits(r2, caps):
                discarded += 1
                continue
            if rs.add(r2):
                adjoined_now += 1
                total_adjoined += 1
                if len(rs.rules) > caps.max_elements:
                    raise BudgetExceededError(
                        "completion exceeded %d elements" % caps.max_elements
                    )
        if adjoined_now == 0:
            out = list(rs.rules)
            if interreduce_final:
                out = interreduce(field, ny, nx, out, policy=policy)
            else:
                out = sorted(out, key=lambda e: assoc_term_key(e.leading()[1]))
            return Completion(
                elements=out,
                rounds=round_no,
                adjoined=total_adjoined,
                discarded=discarded,
                skipped=skipped,
                exact=(discarded == 0 and skipped == 0),
            )
    raise BudgetExceededError(
        "completion did not stabilize within %d rounds" % caps.max_rounds
    )


def assoc_nf(
    field, ny, nx, elements, e: AssocElement, policy: str = "first", trace=None
) -> AssocElement:
    return _ruleset(field, ny, nx, elements).reduce(e, policy=policy, trace=trace)


def assoc_irr_basis(field, ny, nx, elements, caps: Caps) -> list:
    """Irreducible monomials (y-monomial, word) within the caps, ascending."""
    rs = _ruleset(field, ny, nx, elements)
    monos = cm.enumerate_monomials(ny, caps.max_y_deg)
    out = []
    for n in range(1, caps.max_x_deg + 1):
        for w in product(range(1, nx + 1), repeat=n):
            for m in monos:
                if not rs.reducible_key(m, w):
                    out.append((m, w))
    out.sort(key=assoc_term_key)
    return out


class AssocPresentation:
    """An associative algebra presented over k[Y]/(R) by relations in X."""

    def __init__(self, field: Field, ygens, rrels, xgens, arels):
        self.field = field
        self.ygens = list(ygens)
        self.rrels = list(rrels)
        self.xgens = list(xgens)
        self.arels = list(arels)

    @property
    def ny(self) -> int:
        return len(self.ygens)

    @property
    def nx(self) -> int:
        return len(self.xgens)

    def rx_relations(self) -> list:
        out = []
        for r in self.rrels:
            for i in range(1, self.nx + 1):
                out.append(
                    AssocElement(
                        self.field, {(m, (i,)): c for m, c in r.terms.items()}
                    )
                )
        return out

    def full_rules(self) -> list:
        return list(self.arels) + self.rx_relations()

    def complete(self, caps: Caps, policy: str = "first", jobs: int = 1) -> Completion:
        return assoc_complete(
            self.field, self.ny, self.nx, self.full_rules(), caps, policy, jobs
        )

    def check(self, caps: Caps, policy: str = "first", jobs: int = 1) -> GsbReport:
        return assoc_is_gsb(
            self.field, self.ny, self.nx, self.full_rules(), caps, policy, jobs
        )

    def nf(self, e: AssocElement, policy: str = "first", trace=None, elements=None):
        return assoc_nf(
            self.field,
            self.ny,
            self.nx,
            self.full_rules() if elements is None else elements,
            e,
            policy=policy,
            trace=trace,
        )

    def irr(self, caps: Caps, elements=None) -> list:
        return assoc_irr_basis(
            self.field,
            self.ny,
            self.nx,
            self.full_rules() if elements is None else elements,
            caps,
        )


def envelope(pres) -> AssocPresentation:
    """The universal enveloping presentation: commutator images of the Lie
    relations over the same commutative data."""
    return AssocPresentation(
        pres.field,
        pres.ygens,
        pres.rrels,
        pres.xgens,
        [s.to_associative() for s in pres.srels],
    )
