"""Rote sequences built from standard Sturmian directives."""

from .iet import IETSpec, idoc_check, iet2_code, iet3_code, iet3_params
from .morphisms import (
    B,
    BETA,
    DirectiveParseError,
    DirectiveSpec,
    InvalidDirective,
    Mod2Matrix,
    Morphism,
    compose_directive,
    is_primitive,
)
from .oracle import ScanResult, derived_scan, occurrences, return_words_scan
from .quadratic import QuadraticNumber
from .rote import (
    FactorizationError,
    PrefixType,
    RoteReturnTriple,
    block_factorize,
    generate_rote,
    prefix_matrix,
    prefix_type,
    rote_derived,
    rote_prefix,
    rote_return_words,
)
from .sturmian import (
    ReturnPair,
    SturmianContext,
    bispecial_prefix,
    derived_directive,
    desubstitute,
    generate,
    return_words,
    slope,
)
from .substitutive import (
    DerivedInventory,
    FixingMorphismList,
    derived_inventory,
    fixing_morphisms,
    four_letter_check,
    four_letter_fixed_point,
    minimal_q,
    verify_fixing,
)
from .words import factor_complexity, is_stable, parikh_mod2, s_inverse, s_map

__version__ = "0.1.0"
