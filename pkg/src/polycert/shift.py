"""Division by a monic linear factor ``x - b`` and positivity certificates.

For ``f = a_0 x^n + ... + a_n`` the coefficient polynomials are
``f_0 = a_0`` and ``f_k(x) = x f_{k-1}(x) + a_k``.  Their values at ``b``
are the quotient coefficients ``f_0(b) .. f_{n-1}(b)`` and the remainder
``f_n(b) = f(b)`` of ``f / (x - b)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import NegativeShift, NonpositiveLeadingCoefficient, ZeroPolynomial
from .poly import Poly, RatLike, as_rat


@dataclass(frozen=True)
class Scan:
    """Outcome of a coefficient scan.  Truthy iff nothing offended.

    ``first_offending`` is the smallest index k (1-based, leading
    coefficient is index 0) whose entry violated the condition.
    """

    first_offending: Optional[int] = None

    def __bool__(self):
        return self.first_offending is None

    def __str__(self):
        return "ok" if self else f"fails at index {self.first_offending}"


@dataclass(frozen=True)
class ShiftTable:
    shift_b: Fraction
    values: Tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.values) - 1

    @property
    def quotient(self) -> Tuple[Fraction, ...]:
        return self.values[:-1]

    @property
    def remainder(self) -> Fraction:
        return self.values[-1]


class VerifyResult(enum.Enum):
    VALID = "Valid"
    IDENTITY_MISMATCH = "IdentityMismatch"
    NEGATIVE_COEFFICIENT_CLAIMED = "NegativeCoefficientClaimed"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Certificate:
    """``input_poly == (x - shift_b) * quotient + remainder``.

    ``quotient_coefficients`` are in descending powers.  ``verdict`` is
    the scan of f_1(b), ..., f_n(b) for negative entries; a truthy
    verdict means the identity certifies ``f(x) > 0`` for ``x > b``.
    """

    input_poly: Poly
    shift_b: Fraction
    quotient_coefficients: Tuple[Fraction, ...]
    remainder: Fraction
    verdict: Scan

    @property
    def all_nonnegative(self) -> bool:
        return bool(self.verdict)

    @property
    def var(self) -> str:
        return self.input_poly.var

    def quotient_poly(self) -> Poly:
        return Poly.from_descending(self.quotient_coefficients or (0,), self.var)

    def expand(self) -> Poly:
        linear = Poly((-self.shift_b, Fraction(1)), self.var)
        return self.quotient_poly() * linear + self.remainder


def check_leading(f: Poly) -> Fraction:
    if f.is_zero():
        raise ZeroPolynomial("polynomial is identically zero")
    a0 = f.leading_coefficient()
    if a0 <= 0:
        raise NonpositiveLeadingCoefficient(f"leading coefficient {a0} is not positive")
    return a0


def shift_table(f: Poly, b: RatLike) -> ShiftTable:
    """Values f_0(b), ..., f_n(b) of the coefficient polynomials."""
    if f.is_zero():
        raise ZeroPolynomial("polynomial is identically zero")
    b = as_rat(b)
    a = f.descending()
    values = [a[0]]
    for ak in a[1:]:
        values.append(b * values[-1] + ak)
    return ShiftTable(b, tuple(values))


def first_negative(values: Sequence[Fraction], start: int = 1) -> Scan:
    for k in range(start, len(values)):
        if values[k] < 0:
            return Scan(k)
    return Scan()


def certify_at(f: Poly, b: RatLike) -> Certificate:
    check_leading(f)
    b = as_rat(b)
    if b < 0:
        raise NegativeShift(f"shift {b} is negative")
    table = shift_table(f, b)
    return Certificate(f, b, table.quotient, table.remainder, first_negative(table.values))


def verify(cert: Certificate) -> VerifyResult:
    """Re-expand the certificate and re-scan its coefficients; trusts nothing stored."""
    try:
        expanded = cert.expand()
    except (TypeError, ValueError):
        return VerifyResult.IDENTITY_MISMATCH
    if expanded != cert.input_poly:
        return VerifyResult.IDENTITY_MISMATCH
    fresh = first_negative(tuple(cert.quotient_coefficients) + (cert.remainder,))
    if fresh != cert.verdict:
        return VerifyResult.NEGATIVE_COEFFICIENT_CLAIMED
    # the identity pins the leading entry to a_0; the claim also needs a_0 > 0
    f = cert.input_poly
    if cert.verdict and (f.is_zero() or f.leading_coefficient() <= 0):
        return VerifyResult.NEGATIVE_COEFFICIENT_CLAIMED
    return VerifyResult.VALID
