"""Attached primes of top local cohomology over k[[X1..Xd]].

Decides, for a module presented by its minimal primes, which maximal-
dimension primes are attached to the top local cohomology along a given
homogeneous ideal, and constructs ideals realizing any prescribed subset.
Backed by an exact Buchberger engine over the rationals or a prime field.
"""

from .polycore import (
    GREVLEX,
    LEX,
    Field,
    MonomialOrder,
    ParseError,
    Polynomial,
    RATIONALS,
    Ring,
    RingMismatchError,
    elimination_block,
    homogeneous_components,
    homogeneous_degree,
    monomial_compare,
    parse_polynomial,
)
from .groebner import ReducedGB, buchberger, normal_form, s_polynomial
from .idealops import (
    Ideal,
    NonHomogeneousError,
    NotLinearPrimeError,
    PrimeIdeal,
    contains,
    dim_quotient,
    ideal_eq,
    ideal_intersect,
    ideal_leq,
    ideal_sum,
    is_linear_prime,
    is_m_primary,
    linear_rank,
    maximal_ideal,
)
from .lctop import (
    AttachedSet,
    EmptyAttachedSetError,
    ModulePresentation,
    UnsupportedConstructionError,
    att_top,
    check_lemma25,
    present_module,
    reduce_to_dim1,
    supp_contains,
)
from .realize import (
    ConstructionFailedError,
    Dim1Search,
    QCertificate,
    RealizationReport,
    VerificationFaultError,
    combine_intersection,
    enumerate_all,
    find_dim1_prime,
    realize_subset,
)
from .corpus import example24

__version__ = "0.1.0"

__all__ = [
    "Field",
    "RATIONALS",
    "Ring",
    "Polynomial",
    "MonomialOrder",
    "GREVLEX",
    "LEX",
    "elimination_block",
    "monomial_compare",
    "parse_polynomial",
    "homogeneous_degree",
    "homogeneous_components",
    "ParseError",
    "RingMismatchError",
    "ReducedGB",
    "buchberger",
    "normal_form",
    "s_polynomial",
    "Ideal",
    "PrimeIdeal",
    "NonHomogeneousError",
    "NotLinearPrimeError",
    "maximal_ideal",
    "ideal_sum",
    "ideal_intersect",
    "contains",
    "ideal_leq",
    "ideal_eq",
    "dim_quotient",
    "is_m_primary",
    "linear_rank",
    "is_linear_prime",
    "AttachedSet",
    "ModulePresentation",
    "present_module",
    "att_top",
    "supp_contains",
    "reduce_to_dim1",
    "check_lemma25",
    "EmptyAttachedSetError",
    "UnsupportedConstructionError",
    "ConstructionFailedError",
    "VerificationFaultError",
    "QCertificate",
    "RealizationReport",
    "Dim1Search",
    "find_dim1_prime",
    "realize_subset",
    "combine_intersection",
    "enumerate_all",
    "example24",
]
