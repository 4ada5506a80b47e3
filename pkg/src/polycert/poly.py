"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending by power (``coeffs[i]`` multiplies
``x**i``).  Anything user-facing (display, certificates, JSON) uses the
descending order ``a_0 x^n + a_1 x^(n-1) + ... + a_n`` instead; see
:meth:`Poly.descending` and :meth:`Poly.from_descending`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

from .errors import ZeroPolynomial

Rat = Fraction
RatLike = Union[int, Fraction, str]


def as_rat(value: RatLike) -> Fraction:
    """Coerce ``value`` to a Fraction.  Floats are refused: they are not exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coefficient")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")


def _trim(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    if n == 0:
        return (Fraction(0),)
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Poly:
    """Immutable polynomial.  ``var`` is a display label and takes no part in equality."""

    coeffs: Tuple[Fraction, ...]
    var: str = field(default="x", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim([as_rat(c) for c in self.coeffs]))

    @classmethod
    def from_descending(cls, coeffs: Iterable[RatLike], var: str = "x") -> "Poly":
        return cls(tuple(reversed([as_rat(c) for c in coeffs])), var)

    @classmethod
    def constant(cls, c: RatLike, var: str = "x") -> "Poly":
        return cls((as_rat(c),), var)

    @classmethod
    def monomial(cls, power: int, c: RatLike = 1, var: str = "x") -> "Poly":
        return cls((Fraction(0),) * power + (as_rat(c),), var)

    @classmethod
    def zero(cls, var: str = "x") -> "Poly":
        return cls((Fraction(0),), var)

    def descending(self) -> Tuple[Fraction, ...]:
        """Coefficients a_0, a_1, ..., a_n (leading first)."""
        return tuple(reversed(self.coeffs))

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def degree(self) -> int:
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: RatLike) -> Fraction:
        return evaluate(self, x)

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.var)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other, self.var)
        return add(self, neg(other))

    def __rsub__(self, other):
        return Poly.constant(other, self.var) - self

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def __str__(self):
        from .parser import format_poly

        return format_poly(self)


def evaluate(f: Poly, x: RatLike) -> Fraction:
    """Horner evaluation; the last value of the shift recurrence at ``x``."""
    x = as_rat(x)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def add(f: Poly, g: Poly) -> Poly:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return Poly(tuple(out), f.var)


def neg(f: Poly) -> Poly:
    return Poly(tuple(-c for c in f.coeffs), f.var)


def scale(f: Poly, c: RatLike) -> Poly:
    c = as_rat(c)
    return Poly(tuple(c * a for a in f.coeffs), f.var)


def mul(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly.zero(f.var)
    out = [Fraction(0)] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return Poly(tuple(out), f.var)


def from_roots(roots: Iterable[RatLike], leading: RatLike = 1, var: str = "x") -> Poly:
    """``leading * prod(x - r)``."""
    p = Poly.constant(leading, var)
    for r in roots:
        p = mul(p, Poly((-as_rat(r), Fraction(1)), var))
    return p


def degree(f: Poly) -> int:
    return f.degree()


def leading_coefficient(f: Poly) -> Fraction:
    return f.leading_coefficient()
