"""Integral trace forms of number fields: maximal orders, prime splitting,
signature and discriminant invariants, and spinor-genus comparison."""

from .arith import PrimeFactorization, factor_integer, is_prime, legendre, smallest_nonresidue
from .errors import (
    DegenerateInputError,
    FactorizationLimitError,
    InternalConsistencyError,
    InvalidPrimeError,
    NonMonicInputError,
    OutOfDomainError,
    ParseError,
    RankError,
    ReducibleInputError,
    SingularFormError,
    TraceGenusError,
    WildRamificationError,
)
from .genus import (
    DIFFERENT,
    NOT_APPLICABLE,
    SAME,
    AlphaRow,
    ComparisonResult,
    CrossValidation,
    EquivalencePrediction,
    compare_spinor_genus,
    cross_validate,
    predict_equivalence,
)
from .orders import (
    MaximalOrder,
    Order,
    dedekind_is_pmaximal,
    maximal_order,
    pmaximalize,
)
from .polys import IntPoly, coeff_csv, discriminant, parse_poly, poly_to_string
from .splitting import QuotientAlgebra, SplittingType, quotient_algebra, split_prime
from .traceform import (
    AlphaClass,
    FieldAnalysis,
    GammaClassification,
    GammaTest,
    TraceForm,
    alpha_invariant,
    alpha_matches_disc_formula,
    analyze_field,
    classify_gamma,
    disc_square_class,
    field_signature,
    form_signature,
    gram_matrix,
    power_sums,
    verify_alpha_formula,
)
from .zfactor import factor_over_z, is_irreducible

__version__ = "0.1.0"

__all__ = [
    "AlphaClass",
    "AlphaRow",
    "ComparisonResult",
    "CrossValidation",
    "DIFFERENT",
    "DegenerateInputError",
    "EquivalencePrediction",
    "FactorizationLimitError",
    "FieldAnalysis",
    "GammaClassification",
    "GammaTest",
    "IntPoly",
    "InternalConsistencyError",
    "InvalidPrimeError",
    "MaximalOrder",
    "NOT_APPLICABLE",
    "NonMonicInputError",
    "Order",
    "OutOfDomainError",
    "ParseError",
    "PrimeFactorization",
    "QuotientAlgebra",
    "RankError",
    "ReducibleInputError",
    "SAME",
    "SingularFormError",
    "SplittingType",
    "TraceForm",
    "TraceGenusError",
    "WildRamificationError",
    "alpha_invariant",
    "alpha_matches_disc_formula",
    "analyze_field",
    "classify_gamma",
    "coeff_csv",
    "compare_spinor_genus",
    "cross_validate",
    "dedekind_is_pmaximal",
    "disc_square_class",
    "discriminant",
    "factor_integer",
    "factor_over_z",
    "field_signature",
    "form_signature",
    "gram_matrix",
    "is_irreducible",
    "is_prime",
    "legendre",
    "maximal_order",
    "parse_poly",
    "pmaximalize",
    "poly_to_string",
    "power_sums",
    "predict_equivalence",
    "quotient_algebra",
    "smallest_nonresidue",
    "split_prime",
    "verify_alpha_formula",
]
