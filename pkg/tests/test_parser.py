import random
import re
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import QUARTIC, QUINTIC, polys, rationals
from polycert import (
    ExponentTooLarge,
    ExpressionSyntaxError,
    MultipleVariables,
    NegativeExponent,
    ParseError,
    Poly,
    format_poly,
    from_roots,
    mul,
    parse,
)


def test_parse_quintic():
    r = parse(QUINTIC)
    assert r.poly.descending() == (2842, -7821, -16884, 10428, 5082, -2607)
    assert r.variable_name == "n"
    assert r.poly.var == "n"


def test_parse_factored_quartic():
    expected = from_roots([1, 2, 3, 4])
    assert parse(QUARTIC).poly == expected
    assert parse("(x-1)(x-2)(x-3)(x-4)").poly == expected
    assert parse("(x − 1)(x − 2)(x − 3)(x − 4)").poly == expected


def test_parse_rational_literals():
    assert parse("x^2 - 2/3*x + 1/6").poly.descending() == (1, Fraction(-2, 3), Fraction(1, 6))


@pytest.mark.parametrize(
    "text, desc",
    [
        ("-x^2 + 1", (-1, 0, 1)),
        ("- - 3", None),
        ("x - -3", (1, 3)),
        ("(x+1)^2 x", (1, 2, 1, 0)),
        ("(x+1)^2(x-1)", (1, 1, -1, -1)),
        ("2^3", (8,)),
        ("((x))^0", (1,)),
        ("3*(x+1)", (3, 3)),
        ("+x", (1, 0)),
    ],
)
def test_grammar_cases(text, desc):
    if desc is None:
        with pytest.raises(ParseError):
            parse(text)
    else:
        assert parse(text).poly.descending() == desc


def test_constant_input_defaults_to_x():
    r = parse("7/2")
    assert r.variable_name == "x"
    assert r.poly == Poly.constant(Fraction(7, 2))


def test_explicit_variable():
    assert parse("t^2", variable="t").variable_name == "t"
    with pytest.raises(MultipleVariables):
        parse("x^2", variable="t")


@pytest.mark.parametrize(
    "text, error, position",
    [
        ("2x", ExpressionSyntaxError, 1),
        ("x(x-1)", ExpressionSyntaxError, 1),
        ("2(x-1)", ExpressionSyntaxError, 1),
        ("x + y", MultipleVariables, 4),
        ("x^-2", NegativeExponent, 2),
        ("x^10001", ExponentTooLarge, 2),
        ("1.5*x", ExpressionSyntaxError, 1),
        ("x/2", ExpressionSyntaxError, 1),
        ("(x-1", ExpressionSyntaxError, 4),
        ("", ExpressionSyntaxError, 0),
        ("1/0", ExpressionSyntaxError, 2),
        ("x^y", ExpressionSyntaxError, 2),
        ("x $ 1", ExpressionSyntaxError, 2),
        ("x^2^3", ExpressionSyntaxError, 3),
        ("sin(x)", ExpressionSyntaxError, 3),
    ],
)
def test_rejections_are_positioned(text, error, position):
    with pytest.raises(error) as info:
        parse(text)
    assert info.value.position == position


def test_exponent_cap_is_configurable():
    with pytest.raises(ExponentTooLarge):
        parse("x^21", max_exponent=20)
    assert parse("x^20", max_exponent=20).poly.degree() == 20


def test_format_plain():
    assert format_poly(Poly.from_descending([1, -10, 35, -50, 24])) == "x^4 - 10*x^3 + 35*x^2 - 50*x + 24"
    assert format_poly(Poly.zero()) == "0"
    assert format_poly(Poly.from_descending([Fraction(-2, 3), 0, 1], "t")) == "-2/3*t^2 + 1"


def test_format_latex_quotient_from_certificate():
    q = Poly.from_descending([2842, 6389, 15061, 85733, 433747], "n")
    assert format_poly(q, "latex") == "2842 n^4 + 6389 n^3 + 15061 n^2 + 85733 n + 433747"
    assert format_poly(Poly.from_descending([Fraction(1, 2)] + [0] * 10), "latex") == "\\frac{1}{2} x^{10}"


@given(polys(max_degree=12, coeffs=rationals(10**6, 10**4)), st.sampled_from(["x", "n", "t", "z_1"]))
def test_round_trip(f, var):
    f = f.with_var(var)
    r = parse(format_poly(f))
    assert r.poly == f
    if not f.coeffs[1:] == ():
        assert r.variable_name == var


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=7))
def test_factored_expansion(roots):
    text = "".join(f"(x - {r})" if r >= 0 else f"(x + {-r})" for r in roots)
    expected = Poly.constant(1)
    for r in roots:
        expected = mul(expected, Poly.from_descending([1, -r]))
    assert parse(text).poly == expected


_ALPHABET = "x+-*^/()0123 .y"


def _as_python(text):
    """Same expression in exact Python arithmetic, following the documented grammar."""
    py = re.sub(r"(\d+)\s*/\s*(\d+)", r"(F('\1')/F('\2'))", text)
    py = re.sub(r"(?<![\w('])(\d+)", r"F('\1')", py)
    py = re.sub(r"[A-Za-z_]\w*(?<!F)(?!\()", "X", py)
    py = re.sub(r"\)\s*(?=[(X])", ")*", py)
    return py.replace("^", "**")


def test_garbage_never_yields_a_wrong_polynomial():
    rng = random.Random(7)
    accepted = 0
    for _ in range(5000):
        text = "".join(rng.choice(_ALPHABET) for _ in range(rng.randint(0, 12)))
        try:
            poly = parse(text).poly
        except ParseError as e:
            assert 0 <= e.position <= len(text)
            continue
        accepted += 1
        py = _as_python(text)
        for x in (Fraction(2), Fraction(-3, 2)):
            ref = eval(py, {"__builtins__": {}}, {"X": x, "F": Fraction})  # fixed alphabet
            assert poly(x) == ref, (text, py)
    assert accepted > 100
