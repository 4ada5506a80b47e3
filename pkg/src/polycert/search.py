"""Searching for shifts that admit a positivity certificate.

``predicate_p(f, b)`` asks whether every f_k(b), k = 1..n, is
nonnegative.  Once it holds at some b it holds at every larger b, so
the set of working shifts is a ray ``[b*, oo)``.  This module finds a
small working integer with Laguerre's staged search, tightens it to the
least working integer, and brackets the optimal real threshold ``b*``
by bisection.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import NegativeShift
from .poly import Poly, RatLike, as_rat
from .shift import Certificate, Scan, certify_at, check_leading, first_negative, shift_table

DEFAULT_EPSILON = Fraction(1, 2**20)


def predicate_p(f: Poly, b: RatLike) -> Scan:
    """Truthy iff f_1(b), ..., f_n(b) are all >= 0."""
    check_leading(f)
    b = as_rat(b)
    if b < 0:
        raise NegativeShift(f"shift {b} is negative")
    return first_negative(shift_table(f, b).values)


def _value(f_desc, b: Fraction, k: int) -> Fraction:
    acc = Fraction(0)
    for c in f_desc[: k + 1]:
        acc = acc * b + c
    return acc


def _first_nonneg_integer(f_desc, k: int, start: int, gallop: bool) -> int:
    """Least integer c >= start with f_k(c) >= 0, assuming f_1..f_{k-1} >= 0 at start."""
    if not gallop:
        c = start
        while _value(f_desc, Fraction(c), k) < 0:
            c += 1
        return c
    # f_k >= 0 is upward closed on [start, oo) here, so doubling + bisection
    # finds the same integer as the unit-step scan
    if _value(f_desc, Fraction(start), k) >= 0:
        return start
    lo, step = start, 1
    while _value(f_desc, Fraction(start + step), k) < 0:
        lo = start + step
        step *= 2
    hi = start + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _value(f_desc, Fraction(mid), k) >= 0:
            hi = mid
        else:
            lo = mid
    return hi


def laguerre_stages(f: Poly, gallop: bool = False) -> Tuple[Tuple[int, int], ...]:
    """Trace of Laguerre's integer search as ``(index fixed, b after stage)`` pairs.

    The first stage makes f_1 >= 0 with the smallest positive integer;
    each later stage raises ``b`` one unit at a time until the first
    negative f_{k+1}(b) becomes nonnegative.  At most n stages occur.
    """
    check_leading(f)
    a = f.descending()
    n = len(a) - 1
    if n == 0:
        return ((0, 1),)
    b = max(1, math.ceil(-a[1] / a[0]))
    stages = [(1, b)]
    while True:
        scan = first_negative(shift_table(f, b).values)
        if scan:
            return tuple(stages)
        k = scan.first_offending
        b = _first_nonneg_integer(a, k, b, gallop)
        stages.append((k, b))


def laguerre_integer_search(f: Poly, gallop: bool = False) -> int:
    """Positive integer b with ``predicate_p(f, b)`` true, by Laguerre's staged search.

    ``gallop=True`` replaces the unit steps inside a stage by doubling
    and bisection; the result is identical.
    """
    return laguerre_stages(f, gallop)[-1][1]


def minimal_integer_shift(f: Poly, gallop: bool = False) -> int:
    """Least nonnegative integer m with ``predicate_p(f, m)`` true."""
    m = laguerre_integer_search(f, gallop)
    while m > 0 and predicate_p(f, m - 1):
        m -= 1
    return m


@dataclass(frozen=True)
class ThresholdBracket:
    """Bracket ``lo < b* <= hi`` on the optimal shift.

    P fails at ``lo`` and holds at ``hi``.  When ``exact`` is set, ``b*``
    is rational and equals ``hi``.  ``witness_index_p`` is the index k
    minimizing f_k(hi), the binding constraint; ``zero_indices`` lists the
    k with f_k(hi) == 0.  ``degenerate`` marks inputs without a negative
    coefficient, for which the threshold is 0 and ``lo == hi == 0``.
    """

    lo: Fraction
    hi: Fraction
    epsilon: Fraction
    exact: Optional[Fraction]
    witness_index_p: int
    zero_indices: Tuple[int, ...] = ()
    degenerate: bool = False
    iterations: int = 0

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


def _binding(values) -> Tuple[int, Tuple[int, ...]]:
    n = len(values) - 1
    if n == 0:
        return 0, ()
    p = min(range(1, n + 1), key=lambda k: (values[k], k))
    zeros = tuple(k for k in range(1, n + 1) if values[k] == 0)
    return p, zeros


def optimal_threshold(f: Poly, epsilon: RatLike = DEFAULT_EPSILON) -> ThresholdBracket:
    """Bracket the least shift admitting a certificate, to width ``epsilon``.

    If P holds at a positive point m where some f_k(m) == 0, then m is the
    threshold exactly: for any m' > b* every f_k(m') with k >= 1 is
    strictly positive.  Bisection stops there with ``exact = m``.
    """
    check_leading(f)
    epsilon = as_rat(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if predicate_p(f, 0):
        p, zeros = _binding(shift_table(f, 0).values)
        zero = Fraction(0)
        return ThresholdBracket(zero, zero, epsilon, zero, p, zeros, degenerate=True)

    lo, hi = Fraction(0), Fraction(laguerre_integer_search(f))
    exact = None
    cap = math.ceil(math.log2(hi / epsilon)) + 1 if hi > epsilon else 1
    iterations = 0
    values = shift_table(f, hi).values
    if any(v == 0 for v in values[1:]):
        exact = hi
    while exact is None and hi - lo > epsilon and iterations < cap:
        iterations += 1
        mid = (lo + hi) / 2
        mid_values = shift_table(f, mid).values
        if first_negative(mid_values):
            hi, values = mid, mid_values
            if any(v == 0 for v in mid_values[1:]):
                exact = mid
        else:
            lo = mid
    if exact is not None:
        # nothing below the exact threshold works
        lo = max(Fraction(0), exact - epsilon)
    p, zeros = _binding(values)
    return ThresholdBracket(lo, hi, epsilon, exact, p, zeros, iterations=iterations)


def certify_minimal(f: Poly, mode: str = "integer", epsilon: RatLike = DEFAULT_EPSILON) -> Certificate:
    """Certificate at the least integer shift (``mode="integer"``) or at
    the upper end of the threshold bracket (``mode="real"``)."""
    if mode == "integer":
        b = minimal_integer_shift(f)
    elif mode == "real":
        b = optimal_threshold(f, epsilon).hi
    else:
        raise ValueError(f"unknown mode {mode!r}")
    cert = certify_at(f, b)
    assert cert.all_nonnegative, f"search returned a non-working shift {b}"
    return cert
