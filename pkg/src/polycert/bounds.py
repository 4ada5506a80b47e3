"""Classical root bounds: Lagrange's lemma and Laguerre's test."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import NonpositiveShift, PreconditionNotNonnegative
from .poly import Poly, RatLike, as_rat
from .shift import Scan, check_leading, shift_table

DEFAULT_ROOT_EPSILON = Fraction(1, 2**32)


@dataclass(frozen=True)
class BoundReport:
    """Lagrange bound ``1 + (B / a_0)^(1/k)`` rounded up to a rational.

    ``first_negative_index_k`` counts from the leading coefficient
    (a_0 has index 0).  ``slack`` is an upper bound on
    ``bound_overestimate - (1 + (B/a_0)^(1/k))``; it is 0 when the root
    is rational and was found exactly.
    """

    first_negative_index_k: int
    magnitude_B: Fraction
    bound_overestimate: Fraction
    slack: Fraction

    @property
    def exact(self) -> bool:
        return self.slack == 0


def _int_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, by integer Newton iteration."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _exact_root(q: Fraction, k: int) -> Optional[Fraction]:
    num, den = _int_root(q.numerator, k), _int_root(q.denominator, k)
    if num**k == q.numerator and den**k == q.denominator:
        return Fraction(num, den)
    return None


def kth_root_bracket(q: Fraction, k: int, epsilon: Fraction) -> Tuple[Fraction, Fraction]:
    """Rationals ``lo <= q^(1/k) <= hi`` with ``hi - lo <= epsilon``, by bisection.

    Returns ``(r, r)`` when the root ``r`` is rational.
    """
    if q < 0 or k < 1 or epsilon <= 0:
        raise ValueError("need q >= 0, k >= 1, epsilon > 0")
    if k == 1:
        return q, q
    r = _exact_root(q, k)
    if r is not None:
        return r, r
    lo, hi = Fraction(0), max(Fraction(1), q)
    while hi - lo > epsilon:
        mid = (lo + hi) / 2
        if mid**k <= q:
            lo = mid
        else:
            hi = mid
    return lo, hi


def lagrange_bound(f: Poly, epsilon: RatLike = DEFAULT_ROOT_EPSILON) -> Optional[BoundReport]:
    """Rational upper bound on the positive roots of ``f``.

    Returns ``None`` when ``f`` has no negative coefficient (then ``f``
    has no positive root).  Otherwise ``f(x) > 0`` for every
    ``x > bound_overestimate``.
    """
    a0 = check_leading(f)
    epsilon = as_rat(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    a = f.descending()
    negatives = [j for j, c in enumerate(a) if c < 0]
    if not negatives:
        return None
    k = negatives[0]
    B = max(-a[j] for j in negatives)
    lo, hi = kth_root_bracket(B / a0, k, epsilon)
    return BoundReport(k, B, 1 + hi, hi - lo)


def laguerre_test(f: Poly, b: RatLike) -> Scan:
    """Truthy iff f_1(b), ..., f_{n-1}(b) >= 0 and f_n(b) > 0.

    A truthy result certifies that no real root of ``f`` is ``>= b``.
    """
    check_leading(f)
    b = as_rat(b)
    if b <= 0:
        raise NonpositiveShift(f"shift {b} must be positive")
    values = shift_table(f, b).values
    n = len(values) - 1
    for k in range(1, n):
        if values[k] < 0:
            return Scan(k)
    if values[n] <= 0:
        return Scan(n)
    return Scan()


def shifted_value(values_at_b: Tuple[Fraction, ...], b: Fraction, b_prime: Fraction, i: int) -> Fraction:
    """f_i(b') from the values at b:
    ``f_i(b') = (b' - b) * sum_j f_j(b) b'^(i-1-j) + f_i(b)``, j < i.
    """
    acc = Fraction(0)
    for j in range(i):
        acc = acc * b_prime + values_at_b[j]
    return (b_prime - b) * acc + values_at_b[i]


def monotone_extension_check(f: Poly, b: RatLike, b_prime: RatLike, k: int) -> bool:
    """Whether f_1(b'), ..., f_k(b') are all >= 0, given they are at b.

    The values at ``b'`` are computed both directly and through the
    shifted-value identity; each term of the identity is a product of
    nonnegatives, so ``True`` is the only possible answer.  Raises
    :class:`PreconditionNotNonnegative` if the prefix fails at ``b``.
    """
    check_leading(f)
    b, b_prime = as_rat(b), as_rat(b_prime)
    n = f.degree()
    if not 0 < b < b_prime:
        raise ValueError(f"need 0 < b < b', got b={b}, b'={b_prime}")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    at_b = shift_table(f, b).values
    for i in range(1, k + 1):
        if at_b[i] < 0:
            raise PreconditionNotNonnegative(i, at_b[i])
    at_b_prime = shift_table(f, b_prime).values
    for i in range(1, k + 1):
        via_identity = shifted_value(at_b, b, b_prime, i)
        assert via_identity == at_b_prime[i], "shifted-value identity broken"
        if via_identity < 0:
            return False
    return True
