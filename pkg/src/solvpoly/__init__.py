"""Exact-arithmetic kernel for solvable polynomial algebras.

Multiplication in PBW normal form by terminating rewriting, solvability
and confluence checks, graded/filtered structure verdicts with weight
discovery, and the associated graded and Rees constructions, all over
exact ground fields.
"""

from .algfile import (AlgebraFileData, format_algebra_file, format_monomial,
                      format_poly, parse_algebra_file, parse_poly)
from .degrees import (DegreeFunction, deg_monomial, deg_poly,
                      in_filtration_level, leading_homogeneous)
from .errors import (AlgebraFileError, BudgetExceededError, DimensionMismatch,
                     InvalidDegreeFunction, LevelTooLowError, NotFilteredError,
                     SolvPolyError, ZeroPolynomialError)
from .fields import GF, QQ, PrimeField, RationalField
from .kernel import (DEFAULT_STEP_BUDGET, ConfluenceReport, Multiplier,
                     SolvabilityReport, available_backends, check_pbw_confluence,
                     check_solvable, default_backend, mul, mul_monomials)
from .orderings import (EQUAL, GREATER, LESS, GradedOrder, GrLex, GRevLex,
                        Lex, MonomialOrdering, ReesOrder, compare,
                        is_graded_wrt, leading_monomial, make_graded)
from .poly import (Polynomial, mono_mul, poly_combine, random_polynomial,
                   unit_monomial, zero_monomial)
from .presentation import AlgebraPresentation
from .transform import (GradedTransformResult, ReesTransformResult,
                        build_associated_graded, build_rees,
                        check_lm_transport, dehomogenize, homogenize,
                        homogenize_at, is_degree_first, principal_symbol,
                        project_mod_z)
from .verify import (TypeReport, TypeVerdict, check_filtered_type,
                     check_graded_type, find_weights, verify_degree_laws)

__version__ = "0.1.0"

__all__ = [
    "AlgebraFileData", "AlgebraFileError", "AlgebraPresentation",
    "BudgetExceededError", "ConfluenceReport", "DEFAULT_STEP_BUDGET",
    "DegreeFunction", "DimensionMismatch", "EQUAL", "GF", "GREATER",
    "GradedOrder", "GradedTransformResult", "GrLex", "GRevLex",
    "InvalidDegreeFunction", "LESS", "LevelTooLowError", "Lex",
    "MonomialOrdering", "Multiplier", "NotFilteredError", "Polynomial",
    "PrimeField", "QQ", "RationalField", "ReesOrder", "ReesTransformResult",
    "SolvPolyError", "SolvabilityReport", "TypeReport", "TypeVerdict",
    "ZeroPolynomialError", "available_backends", "build_associated_graded",
    "build_rees", "check_filtered_type", "check_graded_type",
    "check_lm_transport", "check_pbw_confluence", "check_solvable", "compare",
    "default_backend", "deg_monomial", "deg_poly", "dehomogenize",
    "find_weights", "format_algebra_file", "format_monomial", "format_poly", "homogenize",
    "homogenize_at", "in_filtration_level", "is_degree_first", "is_graded_wrt",
    "leading_homogeneous", "leading_monomial", "make_graded", "mono_mul",
    "mul", "mul_monomials", "parse_algebra_file", "parse_poly",
    "poly_combine", "principal_symbol", "project_mod_z", "random_polynomial",
    "unit_monomial", "verify_degree_laws", "zero_monomial",
]
