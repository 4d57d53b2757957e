"""Exact staircase combinatorics, Groebner bases and Groebner-stratum
equations over the rationals."""

from .errors import DimensionMismatch, DomainError, InternalConsistencyError
from .hilbert import HilbertPolynomial, gotzmann_decomposition, gotzmann_number
from .ideals import (
    colon_by_irrelevant,
    ideals_equal,
    initial_standard_set,
    intersect_ideals,
    is_reduced_gb_for,
    saturate_ideal,
    truncate_ideal,
)
from .orders import (
    GREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    compare,
    degree,
    divides,
    elimination_order,
    order_by_name,
)
from .poly import GroebnerBasis, LeadingData, Poly, buchberger, leading_data, normal_form, s_polynomial
from .scheme import (
    ExtensionFamily,
    FunctorPoint,
    SchemeIdeal,
    TPoly,
    TVar,
    degree_up,
    extension_row,
    ingest_coefficient_table,
    make_point,
    point_from_basis,
    point_to_basis,
    scheme_ideal,
    specialize,
    t_ring,
    verify_point,
)
from .staircase import EdgeTriple, StandardSet, new_standard_set
from .textio import format_polynomial, parse_polynomial, parse_polynomial_list

__all__ = [
    "DimensionMismatch", "DomainError", "InternalConsistencyError",
    "HilbertPolynomial", "gotzmann_decomposition", "gotzmann_number",
    "colon_by_irrelevant", "ideals_equal", "initial_standard_set",
    "intersect_ideals", "is_reduced_gb_for", "saturate_ideal", "truncate_ideal",
    "GREVLEX", "GRLEX", "LEX", "MonomialOrder", "compare", "degree", "divides",
    "elimination_order", "order_by_name",
    "GroebnerBasis", "LeadingData", "Poly", "buchberger", "leading_data",
    "normal_form", "s_polynomial",
    "ExtensionFamily", "FunctorPoint", "SchemeIdeal", "TPoly", "TVar",
    "degree_up", "extension_row", "ingest_coefficient_table", "make_point",
    "point_from_basis", "point_to_basis", "scheme_ideal", "specialize",
    "t_ring", "verify_point",
    "EdgeTriple", "StandardSet", "new_standard_set",
    "format_polynomial", "parse_polynomial", "parse_polynomial_list",
]
