"""Exact positivity certificates for univariate polynomials.

A certificate is a shift ``b`` with ``f(x) = (x - b) q(x) + r`` where every
coefficient of ``q`` and ``r`` is nonnegative; it proves ``f(x) > 0`` for
``x > b``.
"""
from fractions import Fraction as Rat

from .bounds import BoundReport, lagrange_bound, laguerre_test, monotone_extension_check
from .errors import (
    ExponentTooLarge,
    ExpressionSyntaxError,
    MultipleVariables,
    NegativeExponent,
    NegativeShift,
    NonpositiveLeadingCoefficient,
    NonpositiveShift,
    ParseError,
    PolycertError,
    PreconditionNotNonnegative,
    ZeroPolynomial,
)
from .parser import ParseResult, format_poly, parse
from .poly import Poly, add, degree, evaluate, from_roots, leading_coefficient, mul, neg, scale
from .search import (
    ThresholdBracket,
    certify_minimal,
    laguerre_integer_search,
    minimal_integer_shift,
    optimal_threshold,
    predicate_p,
)
from .shift import Certificate, Scan, ShiftTable, VerifyResult, certify_at, shift_table, verify

__all__ = [name for name in dir() if not name.startswith("_")]
