"""Groebner-Shirshov bases for Lie algebras over commutative algebras.

The ground ring is K = k[Y|R], a commutative polynomial algebra modulo
relations; the Lie algebra is presented by bracket relations over X with
coefficients in K.  The package computes capped completions, normal
forms, irreducible monomial bases, associative envelopes, and speciality
certificates or non-speciality witnesses.
"""

from .commutative import Poly, buchberger, is_groebner, normal_form
from .errors import (
    BudgetExceededError,
    CapsExceededError,
    CompositionError,
    InvalidWordError,
    LieGsbError,
    NotLieElementError,
    OccurrenceError,
    PresentationError,
    ZeroElementError,
)
from .field import QQ, Field
from .freelie import AssocElement, LieElement, from_associative
from .gsb_assoc import (
    AssocPresentation,
    assoc_complete,
    assoc_irr_basis,
    assoc_is_gsb,
    assoc_nf,
    envelope,
)
from .gsb_lie import (
    Caps,
    Completion,
    GsbReport,
    LiePresentation,
    embed_two_generated,
    irr_basis,
    is_gsb,
    nf,
    shirshov_complete,
    word_problem_homogeneous,
)
from .presentation import (
    fmt_assoc,
    fmt_lie,
    fmt_poly,
    fmt_presentation,
    parse_lie_element,
    parse_presentation,
    parse_presentation_file,
)
from .speciality import (
    INCONCLUSIVE,
    NON_SPECIAL,
    SPECIAL,
    SpecialityReport,
    check_speciality_criterion,
    nonspeciality_witness,
)
from .words import (
    chibrikov_bracketing,
    double_bracketing,
    enumerate_alsw,
    foliage,
    is_alsw,
    is_nlsw,
    lyndon_factorize,
    special_bracketing,
    std_bracketing,
)

__version__ = "0.1.0"

__all__ = [
    "AssocElement",
    "AssocPresentation",
    "BudgetExceededError",
    "Caps",
    "CapsExceededError",
    "Completion",
    "CompositionError",
    "Field",
    "GsbReport",
    "INCONCLUSIVE",
    "InvalidWordError",
    "LieElement",
    "LieGsbError",
    "LiePresentation",
    "NON_SPECIAL",
    "NotLieElementError",
    "OccurrenceError",
    "Poly",
    "PresentationError",
    "QQ",
    "SPECIAL",
    "SpecialityReport",
    "ZeroElementError",
    "assoc_complete",
    "assoc_irr_basis",
    "assoc_is_gsb",
    "assoc_nf",
    "buchberger",
    "check_speciality_criterion",
    "chibrikov_bracketing",
    "double_bracketing",
    "embed_two_generated",
    "enumerate_alsw",
    "envelope",
    "fmt_assoc",
    "fmt_lie",
    "fmt_poly",
    "fmt_presentation",
    "foliage",
    "from_associative",
    "irr_basis",
    "is_alsw",
    "is_groebner",
    "is_gsb",
    "is_nlsw",
    "lyndon_factorize",
    "nf",
    "nonspeciality_witness",
    "normal_form",
    "parse_lie_element",
    "parse_presentation",
    "parse_presentation_file",
    "shirshov_complete",
    "special_bracketing",
    "std_bracketing",
    "word_problem_homogeneous",
]
