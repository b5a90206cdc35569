"""Exact arithmetic for Riordan arrays, the central transform of integer
sequences, and Hankel-transform machinery.

The package works over exact rationals throughout: truncated formal power
series (:mod:`riordan.series`), a generating-function expression parser
(:mod:`riordan.gf`), the Riordan group and its matrix views
(:mod:`riordan.arrays`), the central transform and classical sequence
transforms (:mod:`riordan.transforms`), Hankel determinants with rational
generating-function reconstruction and J-fractions (:mod:`riordan.hankel`),
and verifiers for the identity families (:mod:`riordan.families`).
"""

from .series import (
    CompositionError,
    DivisionError,
    PowerSeries,
    ReversionError,
    SeriesError,
    SqrtError,
)
from .gf import ParseError, expand_gf, parse_gf
from .arrays import (
    RiordanArray,
    RiordanError,
    TriangularMatrix,
    binomial_partial_sum_array,
    catalan_matrix,
    catalan_triangle_array,
    central_binomial_array,
    central_binomial_inverse_array,
    identity_array,
    pascal,
)
from .transforms import (
    binomial_transform,
    c_inverse,
    c_transform,
    c_transform_constructive,
    c_transform_sequence,
    catalan_transform,
    inverse_binomial_transform,
    invert_alpha,
    partial_sums,
    reciprocal_preimage_sequence,
    reciprocal_sequence,
)
from .hankel import (
    FitError,
    HankelError,
    JFraction,
    RationalGF,
    bareiss_determinant,
    fit_rational_gf,
    hankel_transform,
)
from .families import VerificationReport, verify_all
from .oeis import OeisResult, oeis_lookup

__version__ = "1.0.0"

__all__ = [
    "CompositionError",
    "DivisionError",
    "FitError",
    "HankelError",
    "JFraction",
    "OeisResult",
    "ParseError",
    "PowerSeries",
    "RationalGF",
    "ReversionError",
    "RiordanArray",
    "RiordanError",
    "SeriesError",
    "SqrtError",
    "TriangularMatrix",
    "VerificationReport",
    "bareiss_determinant",
    "binomial_partial_sum_array",
    "binomial_transform",
    "c_inverse",
    "c_transform",
    "c_transform_constructive",
    "c_transform_sequence",
    "catalan_matrix",
    "catalan_transform",
    "catalan_triangle_array",
    "central_binomial_array",
    "central_binomial_inverse_array",
    "expand_gf",
    "fit_rational_gf",
    "hankel_transform",
    "identity_array",
    "inverse_binomial_transform",
    "invert_alpha",
    "oeis_lookup",
    "parse_gf",
    "partial_sums",
    "pascal",
    "reciprocal_preimage_sequence",
    "reciprocal_sequence",
    "verify_all",
]
