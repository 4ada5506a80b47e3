"""Exit criteria.  Each test records one PASS/FAIL line, printed in the
"acceptance criteria" section of the pytest summary."""
import json
import random
import time
import timeit
from fractions import Fraction
from math import ceil

from conftest import QUARTIC, QUINTIC
from oracles import count_roots_at_least, holds, linear_scan_minimal_shift, scan_positive_roots
from polycert import (
    Poly,
    Scan,
    VerifyResult,
    certify_at,
    certify_minimal,
    evaluate,
    format_poly,
    from_roots,
    lagrange_bound,
    minimal_integer_shift,
    monotone_extension_check,
    optimal_threshold,
    parse,
    predicate_p,
    verify,
)
from polycert.cli import main
from polycert.report import certificate_from_json, certificate_to_json

EPS20 = Fraction(1, 2**20)


def random_int_poly(rng, max_degree, need_negative=False):
    while True:
        n = rng.randint(1, max_degree)
        desc = [rng.randint(1, 10)] + [rng.randint(-50, 50) for _ in range(n)]
        if not need_negative or any(c < 0 for c in desc):
            return Poly.from_descending(desc)


def random_rational(rng, lo, hi, max_den=8):
    d = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * d, hi * d), d)


def test_c1_eq2_reproduction(criterion, capsys):
    with criterion("C1", "certify --mode integer on the quintic gives the b = 5 identity, < 1 ms"):
        assert main(["certify", "--mode", "integer", "--format", "json", QUINTIC]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["shift"] == ["5", "1"]
        assert doc["quotient"] == [[str(c), "1"] for c in (2842, 6389, 15061, 85733, 433747)]
        assert doc["remainder"] == ["2166128", "1"]
        f = parse(QUINTIC).poly
        cert = certify_minimal(f, "integer")
        assert cert.shift_b == 5
        assert cert.quotient_coefficients == (2842, 6389, 15061, 85733, 433747)
        assert cert.remainder == 2166128
        per_call = min(timeit.repeat(lambda: certify_minimal(f, "integer"), number=50, repeat=5)) / 50
        assert per_call < 1e-3, f"{per_call * 1e3:.3f} ms"


def test_c2_value_at_4(criterion):
    with criterion("C2", "f(4) = 12025 for the quintic"):
        assert evaluate(parse(QUINTIC).poly, 4) == 12025


def test_c3_quartic(criterion, capsys):
    with criterion("C3", "quartic: negative coefficient at b = 5, minimal shift 10, exact threshold 10"):
        f = parse(QUARTIC).poly
        assert certify_at(f, 5).verdict == Scan(1)
        assert main(["certify-at", "--shift", "5", QUARTIC]) == 1
        capsys.readouterr()
        assert minimal_integer_shift(f) == 10
        assert optimal_threshold(f).exact == 10


def test_c4_conjecture_witness(criterion):
    with criterion("C4", "500 polynomials with a positive root: certify_minimal + verify Valid, < 30 s"):
        rng = random.Random(20240401)
        start = time.perf_counter()
        for _ in range(500):
            n = rng.randint(1, 8)
            roots = [random_rational(rng, -10, 10) for _ in range(n)]
            if not any(r > 0 for r in roots):
                roots[rng.randrange(n)] = random_rational(rng, 0, 10) or Fraction(1)
            f = from_roots(roots, rng.randint(1, 10))
            for mode in ("integer", "real"):
                cert = certify_minimal(f, mode)
                assert cert.all_nonnegative
                assert verify(cert) is VerifyResult.VALID
                assert cert.shift_b >= max(roots)
        assert time.perf_counter() - start < 30


def test_c5_monotonicity(criterion):
    with criterion("C5", "500 (f, b, b') with P(b): P(b') holds, < 10 s"):
        rng = random.Random(5)
        start = time.perf_counter()
        done = 0
        while done < 500:
            f = random_int_poly(rng, 8)
            b = random_rational(rng, 0, 60)
            if b == 0 or not holds(f.descending(), b):
                continue
            b_prime = b + random_rational(rng, 0, 20) + Fraction(1, rng.randint(1, 1000))
            assert predicate_p(f, b)
            assert predicate_p(f, b_prime)
            assert monotone_extension_check(f, b, b_prime, f.degree())
            done += 1
        assert time.perf_counter() - start < 10


def test_c6_lagrange_soundness(criterion):
    with criterion("C6", "500 polynomials: f > 0 beyond the Lagrange bound, no root at or above it, < 30 s"):
        rng = random.Random(6)
        start = time.perf_counter()
        for _ in range(500):
            f = random_int_poly(rng, 6, need_negative=True)
            bound = lagrange_bound(f).bound_overestimate
            for _ in range(20):
                x = bound + random_rational(rng, 0, 100, max_den=1000) + Fraction(1, 10**6)
                assert evaluate(f, x) > 0
            desc = f.descending()
            assert all(r < bound for r in scan_positive_roots(desc, bound))
            assert count_roots_at_least(desc, bound) == 0
        assert time.perf_counter() - start < 30


def test_c7_minimal_shift_oracle(criterion):
    with criterion("C7", "200 polynomials: minimal_integer_shift equals the linear scan from 0, < 20 s"):
        rng = random.Random(7)
        start = time.perf_counter()
        for _ in range(200):
            f = random_int_poly(rng, 8)
            assert minimal_integer_shift(f) == linear_scan_minimal_shift(f.descending())
        assert time.perf_counter() - start < 20


def test_c8_threshold_bracket(criterion):
    with criterion("C8", "200 brackets at 2^-20: P(hi), not P(lo), width, integer consistency, < 60 s"):
        rng = random.Random(8)
        start = time.perf_counter()
        for _ in range(200):
            f = random_int_poly(rng, 8, need_negative=True)
            t = optimal_threshold(f, EPS20)
            assert predicate_p(f, t.hi)
            assert not predicate_p(f, t.lo)
            assert 0 <= t.lo < t.hi and t.hi - t.lo <= EPS20
            m = linear_scan_minimal_shift(f.descending())
            # the true threshold lies in (lo, hi] and m is its ceiling
            assert t.lo < m < t.hi + 1
            if t.exact is not None:
                assert m == ceil(t.exact)
            elif ceil(t.lo) == ceil(t.hi):
                assert m == ceil(t.hi)
        assert time.perf_counter() - start < 60


def test_c9_round_trips(criterion):
    with criterion("C9", "parse(format(f)) = f on 1000 polynomials; certificate JSON round-trips verify Valid"):
        rng = random.Random(9)
        for _ in range(1000):
            n = rng.randint(0, 12)
            desc = [random_rational(rng, -1000, 1000, max_den=50) for _ in range(n + 1)]
            if desc[0] == 0:
                desc[0] = Fraction(1)
            f = Poly.from_descending(desc, rng.choice(["x", "n", "t"]))
            assert parse(format_poly(f)).poly == f
        certs = [certify_minimal(parse(QUINTIC).poly), certify_at(parse(QUARTIC).poly, 5),
                 certify_minimal(parse(QUARTIC).poly, "real")]
        for _ in range(200):
            f = random_int_poly(rng, 8)
            certs.append(certify_minimal(f, rng.choice(["integer", "real"])))
            certs.append(certify_at(f, random_rational(rng, 0, 30)))
        for cert in certs:
            back = certificate_from_json(certificate_to_json(cert))
            assert back == cert
            assert verify(back) is VerifyResult.VALID
