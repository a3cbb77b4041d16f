"""Bijective Burrows-Wheeler transform in linear time via circular induced sorting."""
from .csais import (
    CircularSuffixArray,
    classify_inf_types,
    circular_suffix_array,
    induce,
    lms_inf_substrings,
    rank_lms,
    build_reduced,
    solve_sstar_order,
    suffix_array,
)
from .errors import (
    BBWTError,
    DuplicateConjugate,
    EmptyString,
    NonPrimitiveInput,
    NotFoundWithin,
    SentinelPresent,
)
from .lyndon import ComposedFactorization, LyndonFactorization, compose, composed_factorization, duval_factorize
from .orders import Ordering, Tag, lex_compare, lms_compare, min_conjugate, omega_compare
from .transform import TransformResult, bbwt, bbwt_order, bwt_baseline, bwt_dollar, ebwt, inverse_bbwt

__all__ = [
    "BBWTError",
    "CircularSuffixArray",
    "ComposedFactorization",
    "DuplicateConjugate",
    "EmptyString",
    "LyndonFactorization",
    "NonPrimitiveInput",
    "NotFoundWithin",
    "Ordering",
    "SentinelPresent",
    "Tag",
    "TransformResult",
    "bbwt",
    "bbwt_order",
    "build_reduced",
    "bwt_baseline",
    "bwt_dollar",
    "circular_suffix_array",
    "classify_inf_types",
    "compose",
    "composed_factorization",
    "duval_factorize",
    "ebwt",
    "induce",
    "inverse_bbwt",
    "lex_compare",
    "lms_compare",
    "lms_inf_substrings",
    "min_conjugate",
    "omega_compare",
    "rank_lms",
    "solve_sstar_order",
    "suffix_array",
]
