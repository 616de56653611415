"""Groebner-Shirshov machinery for Lie algebras presented over k[Y].

A rule is a nonzero k-monic Lie element; its leading data is the pair
(y-monomial, foliage word).  Reduction rewrites the greatest term of an
element by carrying a rule over a matched subword of the foliage via a
special bracketing, then repeats on what is left; terms whose foliage
admits no match move to the remainder, so remainders are supported on
irreducible monomials.

Completion runs in rounds: compositions of the frozen rule list are
reduced (optionally in a thread pool, order preserved), the surviving
remainders that fit the degree caps are adjoined smallest first, and the
process repeats until a round adjoins nothing.  Remainders beyond the
caps are discarded but counted; `exact` on the result means nothing was
discarded and no composition family extends past the caps, so the capped
answer is in fact a full basis.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import commutative as cm
from .errors import (
    BudgetExceededError,
    CompositionError,
    LieGsbError,
    ZeroElementError,
)
from .field import Field
from .freelie import LieElement, lie_term_key, nlsw_decompose_z
from .words import (
    enumerate_alsw,
    foliage,
    is_alsw,
    special_bracketing,
    std_bracketing,
)


@dataclass(frozen=True)
class Caps:
    """Degree caps plus completion budgets."""

    max_x_deg: int
    max_y_deg: int
    max_elements: int = 2000
    max_rounds: int = 200


@dataclass
class Composition:
    """One composition instance; w = (y-monomial, word) bounds its value."""

    kind: str
    i: int
    j: Optional[int]
    a: tuple
    b: tuple
    c: Optional[tuple]
    w: tuple
    value: Optional[LieElement] = None


@dataclass
class Completion:
    elements: list
    rounds: int
    adjoined: int
    discarded: int
    skipped: int
    exact: bool


@dataclass
class GsbReport:
    ok: bool
    checked: int
    skipped: int
    failures: list
    overcap: list


def tree_element(field: Field, ny: int, t) -> LieElement:
    """The tree as a Lie element (rewritten to the NLSW basis if needed)."""
    one = (0,) * ny
    return LieElement(
        field, {(one, tt): field.of(z) for tt, z in nlsw_decompose_z(t).items()}
    )


def _eval_with(field, ny, tree, path, repl):
    """Evaluate a bracketing tree with repl substituted at the marked path."""
    if not path:
        return repl
    left, right = tree
    if path[0] == 0:
        return _eval_with(field, ny, left, path[1:], repl).bracket(
            tree_element(field, ny, right)
        )
    return tree_element(field, ny, left).bracket(
        _eval_with(field, ny, right, path[1:], repl)
    )


def normal_s_word(rule: LieElement, a: tuple, b: tuple) -> LieElement:
    """The rule carried over the occurrence of its leading word in a*lead*b.

    For a k-monic rule the result leads with (lead y-monomial, a*lead*b),
    coefficient one.
    """
    if not rule:
        raise ZeroElementError("cannot form a normal s-word of zero")
    ny = len(next(iter(rule.terms))[0])
    _, sx = rule.leading_word()
    w = tuple(a) + sx + tuple(b)
    tree, mark = special_bracketing(w, sx, len(a))
    return _eval_with(rule.field, ny, tree, mark, rule)


class RuleSet:
    """An indexed list of k-monic rules supporting reduction."""

    def __init__(self, field: Field, ny: int, nx: int):
        self.field = field
        self.ny = ny
        self.nx = nx
        self.rules: list = []
        self._leads: list = []
        self._index: dict = {}
        self._nsw: dict = {}

    def add(self, e: LieElement) -> bool:
        """Adjoin a rule (made k-monic); returns False on zero or exact duplicate."""
        if not e:
            return False
        e = e.k_monic()
        if any(r.terms == e.terms for r in self.rules):
            return False
        rid = len(self.rules)
        self.rules.append(e)
        sy, sx = e.leading_word()
        self._leads.append((sy, sx))
        self._index.setdefault(sx, []).append(rid)
        return True

    def nsw(self, rid: int, a: tuple, b: tuple) -> LieElement:
        key = (rid, a, b)
        got = self._nsw.get(key)
        if got is None:
            got = normal_s_word(self.rules[rid], a, b)
            self._nsw[key] = got
        return got

    def _find_divisor(self, wx: tuple, ym: tuple, policy: str):
        matches = []
        n = len(wx)
        for length in range(1, n + 1):
            for p in range(0, n - length + 1):
                for rid in self._index.get(wx[p : p + length], ()):
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

    def reduce(self, e: LieElement, policy: str = "first", trace=None) -> LieElement:
        """Fully divide e by the rules; the remainder has no reducible term."""
        F = self.field
        work = dict(e.terms)
        rem: dict = {}
        while work:
            key = max(work, key=lie_term_key)
            ym, t = key
            wx = foliage(t)
            hit = self._find_divisor(wx, ym, policy)
            if hit is None:
                rem[key] = work.pop(key)
                continue
            rid, p = hit
            sy, sx = self._leads[rid]
            q = cm.quotient(ym, sy)
            coeff = work[key]
            nsw = self.nsw(rid, wx[:p], wx[p + len(sx) :])
            if trace is not None:
                trace.append((coeff, q, rid, wx[:p], wx[p + len(sx) :]))
            for (ym2, t2), c2 in nsw.terms.items():
                k2 = (cm.mul(ym2, q), t2)
                v = F.sub(work.get(k2, F.zero), F.mul(coeff, c2))
                if v:
                    work[k2] = v
                else:
                    work.pop(k2, None)
        return LieElement(F, rem)


def _ruleset(field, ny, nx, elements) -> RuleSet:
    rs = RuleSet(field, ny, nx)
    for e in elements:
        rs.add(e)
    return rs


# ---------------------------------------------------------------------------
# Composition builders (validated, standalone)


def comp_inclusion(f: LieElement, g: LieElement, pos: int):
    """Composition of inclusion: lead(g) occurs inside lead(f) at pos."""
    f, g = f.k_monic(), g.k_monic()
    fy, fx = f.leading_word()
    gy, gx = g.leading_word()
    if fx[pos : pos + len(gx)] != gx:
        raise CompositionError(
            "leading word %r does not occur at %d of %r" % (gx, pos, fx)
        )
    if f.terms == g.terms and pos == 0 and len(gx) == len(fx):
        raise CompositionError("a rule has no inclusion composition with itself")
    a, b = fx[:pos], fx[pos + len(gx) :]
    L = cm.lcm(fy, gy)
    F = f.field
    left = f.mul_ymono(cm.quotient(L, fy), F.one)
    right = normal_s_word(g, a, b).mul_ymono(cm.quotient(L, gy), F.one)
    return left.sub(right), (L, fx)


def comp_intersection(f: LieElement, g: LieElement, overlap: int):
    """Composition of intersection: a proper suffix of lead(f) is a proper
    prefix of lead(g), of the given length."""
    f, g = f.k_monic(), g.k_monic()
    fy, fx = f.leading_word()
    gy, gx = g.leading_word()
    if not (0 < overlap < len(fx) and overlap < len(gx)):
        raise CompositionError("overlap length %d is not proper" % overlap)
    if fx[len(fx) - overlap :] != gx[:overlap]:
        raise CompositionError("leading words do not overlap by %d" % overlap)
    a, b = fx[: len(fx) - overlap], gx[overlap:]
    w = fx + b
    if not is_alsw(w):
        raise CompositionError("overlap word %r is not an ALSW" % (w,))
    L = cm.lcm(fy, gy)
    F = f.field
    left = normal_s_word(f, (), b).mul_ymono(cm.quotient(L, fy), F.one)
    right = normal_s_word(g, a, ()).mul_ymono(cm.quotient(L, gy), F.one)
    return left.sub(right), (L, w)


def comp_external(f: LieElement, g: LieElement, a: tuple, b: tuple, c: tuple):
    """Composition of external action: disjoint occurrences of both leading
    words inside a*lead(f)*b*lead(g)*c, for rules whose leading y-monomials
    share a variable."""
    f, g = f.k_monic(), g.k_monic()
    fy, fx = f.leading_word()
    gy, gx = g.leading_word()
    if not any(cm.gcd(fy, gy)):
        raise CompositionError("leading y-monomials are coprime")
    w = tuple(a) + fx + tuple(b) + gx + tuple(c)
    if not is_alsw(w):
        raise CompositionError("ambient word %r is not an ALSW" % (w,))
    L = cm.lcm(fy, gy)
    F = f.field
    left = normal_s_word(f, a, tuple(b) + gx + tuple(c)).mul_ymono(
        cm.quotient(L, fy), F.one
    )
    right = normal_s_word(g, tuple(a) + fx + tuple(b), c).mul_ymono(
        cm.quotient(L, gy), F.one
    )
    return left.sub(right), (L, w)


def comp_multiplication(f: LieElement, a: tuple, b: tuple):
    """Composition of multiplication: bracket the carried rule with the
    standard bracketing of its own ambient word; only for rules with a
    nontrivial leading y-monomial."""
    f = f.k_monic()
    fy, fx = f.leading_word()
    if not any(fy):
        raise CompositionError(
            "multiplication compositions need a nontrivial leading y-monomial"
        )
    v = tuple(a) + fx + tuple(b)
    if not is_alsw(v):
        raise CompositionError("ambient word %r is not an ALSW" % (v,))
    ny = len(next(iter(f.terms))[0])
    value = normal_s_word(f, a, b).bracket(
        tree_element(f.field, ny, std_bracketing(v))
    )
    return value, (fy, v + v)


# ---------------------------------------------------------------------------
# Enumeration and the engine


def enumerate_compositions(rs: RuleSet, caps: Caps):
    """All composition instances whose bound fits the caps, in a fixed order.

    Returns (records, skipped) where skipped counts instances or families
    pushed out by the caps; families with unbounded contexts (external,
    multiplication) always count as skipped since no cap contains them.
    """
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
                        Composition(
                            "inclusion", i, j, fx[:p], fx[p + length :], None, (L, fx)
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
                if not is_alsw(w):
                    continue
                records.append(
                    Composition(
                        "intersection",
                        i,
                        j,
                        fx[: len(fx) - t],
                        gx[t:],
                        None,
                        (L, w),
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
                for la in range(0, total + 1):
                    for lb in range(0, total - la + 1):
                        lc = total - la - lb
                        for a in product(alphabet, repeat=la):
                            for b in product(alphabet, repeat=lb):
                                for c in product(alphabet, repeat=lc):
                                    w = a + fx + b + gx + c
                                    if w[0] != max(w) or not is_alsw(w):
                                        continue
                                    records.append(
                                        Composition(
                                            "external", i, j, a, b, c, (L, w)
                                        )
                                    )

    vmax = (caps.max_x_deg + 1) // 2
    for i in ylead:
        fy, fx = leads[i]
        skipped += 1
        room = vmax - len(fx)
        if room < 0:
            continue
        for total in range(0, room + 1):
            for la in range(0, total + 1):
                lb = total - la
                for a in product(alphabet, repeat=la):
                    for b in product(alphabet, repeat=lb):
                        v = a + fx + b
                        if v[0] != max(v) or not is_alsw(v):
                            continue
                        records.append(
                            Composition(
                                "multiplication", i, None, a, b, None, (fy, v + v)
                            )
                        )

    return records, skipped


def _comp_value(rs: RuleSet, comp: Composition) -> LieElement:
    F = rs.field
    i = comp.i
    fy, fx = rs._leads[i]
    if comp.kind == "multiplication":
        v = comp.a + fx + comp.b
        return rs.nsw(i, comp.a, comp.b).bracket(
            tree_element(F, rs.ny, std_bracketing(v))
        )
    j = comp.j
    gy, gx = rs._leads[j]
    L = comp.w[0]
    qf, qg = cm.quotient(L, fy), cm.quotient(L, gy)
    if comp.kind == "inclusion":
        return rs.rules[i].mul_ymono(qf, F.one).sub(
            rs.nsw(j, comp.a, comp.b).mul_ymono(qg, F.one)
        )
    if comp.kind == "intersection":
        return rs.nsw(i, (), comp.b).mul_ymono(qf, F.one).sub(
            rs.nsw(j, comp.a, ()).mul_ymono(qg, F.one)
        )
    return rs.nsw(i, comp.a, comp.b + gx + comp.c).mul_ymono(qf, F.one).sub(
        rs.nsw(j, comp.a + fx + comp.b, comp.c).mul_ymono(qg, F.one)
    )


def _map_ordered(fn, items, jobs: int):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            yield from ex.map(fn, items)
    else:
        yield from map(fn, items)


def _fits(e: LieElement, caps: Caps) -> bool:
    return e.x_degree() <= caps.max_x_deg and e.y_degree() <= caps.max_y_deg


def is_gsb(field, ny, nx, elements, caps: Caps, policy: str = "first", jobs: int = 1):
    """Reduce every capped composition; ok means none leaves a remainder
    within the caps.  Remainders past the caps are reported separately."""
    rs = _ruleset(field, ny, nx, elements)
    records, skipped = enumerate_compositions(rs, caps)
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


def shirshov_complete(
    field, ny, nx, elements, caps: Caps, policy: str = "first", jobs: int = 1
) -> Completion:
    """Close the rules under capped compositions.

    Input rules are kept as given (k-monic, exact duplicates dropped);
    adjoined remainders are fully reduced at adjoin time.  The returned
    elements are sorted by ascending leading term.
    """
    rs = _ruleset(field, ny, nx, elements)
    if len(rs.rules) > caps.max_elements:
        raise BudgetExceededError(
            "input already has more than %d rules" % caps.max_elements
        )
    total_adjoined = 0
    for round_no in range(1, caps.max_rounds + 1):
        records, skipped = enumerate_compositions(rs, caps)
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
        cands.sort(key=lambda e: lie_term_key(e.leading()[1]))
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
            out = sorted(rs.rules, key=lambda e: lie_term_key(e.leading()[1]))
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


def nf(field, ny, nx, elements, e, policy: str = "first", trace=None) -> LieElement:
    """Normal form of e against the given rules (no completion performed)."""
    return _ruleset(field, ny, nx, elements).reduce(e, policy=policy, trace=trace)


def irr_basis(field, ny, nx, elements, caps: Caps) -> list:
    """Monomials y^m * [u] within the caps whose leading data no rule divides,
    ascending.  Entries are (y-monomial, tree) pairs."""
    rs = _ruleset(field, ny, nx, elements)
    monos = cm.enumerate_monomials(ny, caps.max_y_deg)
    out = []
    for u in enumerate_alsw(nx, caps.max_x_deg):
        applicable = []
        n = len(u)
        for length in range(1, n + 1):
            for p in range(0, n - length + 1):
                for rid in rs._index.get(u[p : p + length], ()):
                    applicable.append(rs._leads[rid][0])
        if applicable:
            keep = [
                m for m in monos if not any(cm.divides(sy, m) for sy in applicable)
            ]
        else:
            keep = monos
        t = std_bracketing(u)
        out.extend((m, t) for m in keep)
    out.sort(key=lambda e: lie_term_key(e))
    return out


def word_problem_homogeneous(pres, e: LieElement) -> bool:
    """Ideal membership for X-homogeneous, Y-free presentations.

    Truncates the relations to the degree of e, completes at that degree
    (by homogeneity that decides membership up to the degree), and reduces.
    """
    if pres.rrels:
        raise LieGsbError("the homogeneous word problem needs an empty rrels block")
    for s in pres.srels:
        if s.y_degree() != 0:
            raise LieGsbError("the homogeneous word problem needs Y-free relations")
        degs = {len(foliage(t)) for (_, t) in s.terms}
        if len(degs) > 1:
            raise LieGsbError("relation %r is not X-homogeneous" % (s,))
    if e.y_degree() != 0:
        raise LieGsbError("the element must be Y-free")
    if not e:
        return True
    d = e.x_degree()
    elems = [s for s in pres.srels if s.x_degree() <= d]
    comp = shirshov_complete(pres.field, pres.ny, pres.nx, elems, Caps(d, 0))
    return not nf(pres.field, pres.ny, pres.nx, comp.elements, e)


class LiePresentation:
    """A Lie algebra presented by commutative relations R over Y and Lie
    relations S over X, with coefficients in k[Y]/(R)."""

    def __init__(self, field: Field, ygens, rrels, xgens, srels):
        self.field = field
        self.ygens = list(ygens)
        self.rrels = list(rrels)
        self.xgens = list(xgens)
        self.srels = list(srels)

    @property
    def ny(self) -> int:
        return len(self.ygens)

    @property
    def nx(self) -> int:
        return len(self.xgens)

    def rx_relations(self) -> list:
        """Each commutative relation times each Lie generator."""
        out = []
        for r in self.rrels:
            for i in range(1, self.nx + 1):
                out.append(
                    LieElement(self.field, {(m, i): c for m, c in r.terms.items()})
                )
        return out

    def full_rules(self) -> list:
        return list(self.srels) + self.rx_relations()

    def complete(self, caps: Caps, policy: str = "first", jobs: int = 1) -> Completion:
        return shirshov_complete(
            self.field, self.ny, self.nx, self.full_rules(), caps, policy, jobs
        )

    def check(self, caps: Caps, policy: str = "first", jobs: int = 1) -> GsbReport:
        return is_gsb(
            self.field, self.ny, self.nx, self.full_rules(), caps, policy, jobs
        )

    def irr(self, caps: Caps, elements=None) -> list:
        return irr_basis(
            self.field,
            self.ny,
            self.nx,
            self.full_rules() if elements is None else elements,
            caps,
        )

    def nf(self, e: LieElement, policy: str = "first", trace=None, elements=None):
        return nf(
            self.field,
            self.ny,
            self.nx,
            self.full_rules() if elements is None else elements,
            e,
            policy=policy,
            trace=trace,
        )


def embed_two_generated(pres: LiePresentation):
    """Extend the presentation by generators b < a and relations identifying
    each original generator with a bracketed word in a and b.  Returns the
    new presentation and the name -> image mapping."""
    if "a" in pres.xgens or "b" in pres.xgens:
        raise LieGsbError("generator names 'a' and 'b' are reserved for the embedding")
    n = pres.nx
    B, A = n + 1, n + 2
    one = (0,) * pres.ny
    F = pres.field
    bridges = []
    mapping = {}
    for i in range(1, n + 1):
        w = (A, A) + (B,) * i + (A, B)
        t = std_bracketing(w)
        mapping[pres.xgens[i - 1]] = LieElement(F, {(one, t): F.one})
        bridges.append(LieElement(F, {(one, t): F.one, (one, i): F.neg(F.one)}))
    pres2 = LiePresentation(
        F, pres.ygens, pres.rrels, pres.xgens + ["b", "a"], pres.srels + bridges
    )
    return pres2, mapping
