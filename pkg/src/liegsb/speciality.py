"""Deciding speciality of a presented Lie algebra against its envelope.

Two flows.  The criterion flow certifies speciality at the caps: the
commutative relations are completed, every Lie relation must be
k[Y]-monic, the rules must pass the capped composition check, and every
irreducible Lie monomial must stay irreducible inside the completed
envelope (so the irreducible monomials inject).  The witness flow
refutes speciality: an element that does not reduce to zero on the Lie
side while its associative image does lies in the kernel of the
canonical map into the envelope.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield
from typing import Optional

from .commutative import buchberger, deglex_key as poly_key
from .errors import CapsExceededError, ZeroElementError
from .freelie import AssocElement, LieElement
from .gsb_lie import Caps, LiePresentation
from .gsb_assoc import envelope
from .words import foliage, expand_z

SPECIAL = "special-certified"
NON_SPECIAL = "non-special-witnessed"
INCONCLUSIVE = "inconclusive"


@dataclass
class SpecialityReport:
    verdict: str
    caps: Caps
    exact: bool
    notes: list = dfield(default_factory=list)
    witness: Optional[LieElement] = None
    nf_lie: Optional[LieElement] = None
    nf_assoc: Optional[AssocElement] = None


def _completed_rrels(pres: LiePresentation):
    """Buchberger-complete the commutative relations; note when that changed them."""
    done = buchberger(pres.rrels)
    same = len(done) == len(pres.rrels) and all(
        any(a.terms == b.terms for b in done) for a in (p.monic() for p in pres.rrels)
    )
    pres2 = LiePresentation(pres.field, pres.ygens, done, pres.xgens, pres.srels)
    notes = [] if same else ["commutative relations completed to a Groebner basis"]
    return pres2, notes


def monomial_image(field, ym: tuple, tree) -> AssocElement:
    """The associative image of the Lie basis monomial Y^ym * [tree]."""
    return AssocElement(
        field, {(ym, w): field.of(z) for w, z in expand_z(tree).items()}
    )


def check_speciality_criterion(
    pres: LiePresentation, caps: Caps, policy: str = "first", jobs: int = 1
) -> SpecialityReport:
    pres, notes = _completed_rrels(pres)
    bad = [i for i, s in enumerate(pres.srels) if not s.is_ky_monic()]
    if bad:
        notes.append(
            "relations not k[Y]-monic at positions %s; the criterion does not apply"
            % ", ".join(str(i) for i in bad)
        )
        return SpecialityReport(INCONCLUSIVE, caps, False, notes)
    rep = pres.check(caps, policy=policy, jobs=jobs)
    if not rep.ok:
        notes.append(
            "rules are not closed under composition at these caps "
            "(%d failing); complete them first" % len(rep.failures)
        )
        return SpecialityReport(INCONCLUSIVE, caps, False, notes)
    irr = pres.irr(caps)
    env = envelope(pres)
    acomp = env.complete(caps, policy=policy, jobs=jobs)
    notes.append("envelope completed: %d rules" % len(acomp.elements))
    for ym, tree in irr:
        image = monomial_image(pres.field, ym, tree)
        rem = env.nf(image, policy=policy, elements=acomp.elements)
        ok = bool(rem) and rem.leading()[1] == (ym, foliage(tree))
        if not ok:
            notes.append(
                "irreducible monomial with leading (%r, %r) collapses in the envelope"
                % (ym, foliage(tree))
            )
            return SpecialityReport(INCONCLUSIVE, caps, False, notes)
    exact = rep.skipped == 0 and not rep.overcap and acomp.exact
    notes.append("all %d irreducible monomials stay independent" % len(irr))
    return SpecialityReport(SPECIAL, caps, exact, notes)


def nonspeciality_witness(
    pres: LiePresentation,
    witness: LieElement,
    caps: Caps,
    policy: str = "first",
    jobs: int = 1,
) -> SpecialityReport:
    if not witness:
        raise ZeroElementError("the witness must be nonzero")
    if witness.x_degree() > caps.max_x_deg or witness.y_degree() > caps.max_y_deg:
        raise CapsExceededError("the witness does not fit inside the caps")
    pres, notes = _completed_rrels(pres)
    lcomp = pres.complete(caps, policy=policy, jobs=jobs)
    notes.append("Lie side completed: %d rules" % len(lcomp.elements))
    nf_lie = pres.nf(witness, policy=policy, elements=lcomp.elements)
    env = envelope(pres)
    acomp = env.complete(caps, policy=policy, jobs=jobs)
    notes.append("envelope completed: %d rules" % len(acomp.elements))
    nf_assoc = env.nf(witness.to_associative(), policy=policy, elements=acomp.elements)
    exact = lcomp.exact and acomp.exact
    if nf_lie and not nf_assoc:
        return SpecialityReport(
            NON_SPECIAL, caps, exact, notes, witness, nf_lie, nf_assoc
        )
    if not nf_lie:
        notes.append("witness reduces to zero on the Lie side at these caps")
    if nf_assoc:
        notes.append("witness image does not vanish in the envelope at these caps")
    return SpecialityReport(
        INCONCLUSIVE, caps, exact, notes, witness, nf_lie, nf_assoc
    )
