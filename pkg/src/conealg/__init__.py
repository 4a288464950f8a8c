"""Exact computation of generating sets for intersection algebras of
principal monomial ideals, via fans of rational cones and 2D Hilbert bases,
together with the more general fan algebras."""

from .fan_algebra import (
    FanAlgebraSpec,
    FanLinearFunction,
    FanLinearityError,
    SpecFormatError,
    check_fan_linear,
    fan_algebra_generators,
    graded_component,
    intersection_as_fan_algebra,
    load_fan_algebra_spec,
    principal_cap_algebra,
    principal_cap_generators,
    principal_cap_maximal_power,
    verify_fan_algebra,
)
from .fans import Fan, build_fan, fan_order, locate
from .generators import (
    AsymptoticLimits,
    GeneratorSet,
    SemigroupPresentation,
    VerificationReport,
    asymptotic_limits,
    intersection_generators,
    semigroup_generators,
    verify_generation,
)
from .lattice import (
    Cone2,
    HilbertBasis2,
    LatticePoint2,
    cone,
    cone_contains,
    decompose,
    decompose_over,
    det,
    hilbert_basis,
    primitive,
    slope_descending,
)
from .monomials import (
    BigradedMonomial,
    Monomial,
    MonomialIdeal,
    MonomialParseError,
    PowerCapError,
    default_variables,
    format_bigraded,
    format_monomial,
    ideal_intersect,
    ideal_power,
    ideal_product,
    maximal_ideal,
    member,
    parse_monomial,
    principal_intersection,
    unit_monomial,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticLimits",
    "BigradedMonomial",
    "Cone2",
    "Fan",
    "FanAlgebraSpec",
    "FanLinearFunction",
    "FanLinearityError",
    "GeneratorSet",
    "HilbertBasis2",
    "LatticePoint2",
    "Monomial",
    "MonomialIdeal",
    "MonomialParseError",
    "PowerCapError",
    "SemigroupPresentation",
    "SpecFormatError",
    "VerificationReport",
    "asymptotic_limits",
    "build_fan",
    "check_fan_linear",
    "cone",
    "cone_contains",
    "decompose",
    "decompose_over",
    "default_variables",
    "det",
    "fan_algebra_generators",
    "fan_order",
    "format_bigraded",
    "format_monomial",
    "graded_component",
    "hilbert_basis",
    "ideal_intersect",
    "ideal_power",
    "ideal_product",
    "intersection_as_fan_algebra",
    "intersection_generators",
    "load_fan_algebra_spec",
    "locate",
    "maximal_ideal",
    "member",
    "parse_monomial",
    "primitive",
    "principal_cap_algebra",
    "principal_cap_generators",
    "principal_cap_maximal_power",
    "principal_intersection",
    "semigroup_generators",
    "slope_descending",
    "unit_monomial",
    "verify_fan_algebra",
    "verify_generation",
]
