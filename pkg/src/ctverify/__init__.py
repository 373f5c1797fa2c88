"""Exact-arithmetic verification of Morris-type constant term identities.

The package computes both sides of each identity independently: the left side
by sparse truncated power-series expansion of the rational kernel (with an
optional brute-force enumeration crosscheck), the right side by exact Gamma
arithmetic at half-integer arguments.  Everything is arbitrary-precision
integer and rational arithmetic; there is no floating point and no tolerance.
"""

from .combinat import binomial, catalan, catalan_product
from .gammaprod import (
    HalfInteger,
    PiCancellationError,
    PiPower,
    gamma_half,
    legendre_duplication_check,
    legendre_duplication_sides,
    morris_ratio,
    morris_rhs,
    morris_rhs_pipower,
)
from .identities import (
    MorrisParams,
    OracleMismatchError,
    VerificationReport,
    build_conjecture2_terms,
    build_cry_problem,
    build_morris_problem,
    conjecture2_lhs,
    conjecture2_sum_check,
    eval_ct,
    verify_cry,
    verify_morris,
)
from .series import (
    CTProblem,
    ExponentVector,
    GeometricFactor,
    TruncatedSeries,
    coefficient_of,
    diophantine_coefficient,
    geometric_expand,
    partial_sum_transform,
    series_mul_truncated,
)

__version__ = "0.1.0"

__all__ = [
    "binomial",
    "catalan",
    "catalan_product",
    "ExponentVector",
    "GeometricFactor",
    "CTProblem",
    "TruncatedSeries",
    "partial_sum_transform",
    "geometric_expand",
    "series_mul_truncated",
    "coefficient_of",
    "diophantine_coefficient",
    "MorrisParams",
    "VerificationReport",
    "OracleMismatchError",
    "build_morris_problem",
    "build_cry_problem",
    "build_conjecture2_terms",
    "eval_ct",
    "verify_cry",
    "verify_morris",
    "conjecture2_lhs",
    "conjecture2_sum_check",
    "HalfInteger",
    "PiPower",
    "PiCancellationError",
    "gamma_half",
    "morris_rhs",
    "morris_rhs_pipower",
    "morris_ratio",
    "legendre_duplication_check",
    "legendre_duplication_sides",
    "__version__",
]
