"""Polynomial expression parser and formatter.

Grammar (whitespace is ignored)::

    expr    := sign? term (('+' | '-') sign? term)*
    term    := factor (('*' | <adjacency>) factor)*
    factor  := base ('^' integer)?
    base    := literal | variable | '(' expr ')'
    literal := integer ('/' positive-integer)?
    sign    := '-' | '+'

Adjacency (implicit multiplication) is only accepted right after a
parenthesized factor, so ``(x-1)(x-2)`` and ``(x+1)^2 x`` parse while
``2x`` and ``x(x-1)`` are rejected.  Decimal literals are rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import (
    ExponentTooLarge,
    ExpressionSyntaxError,
    MultipleVariables,
    NegativeExponent,
)
from .poly import Poly

DEFAULT_MAX_EXPONENT = 10_000

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()−])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "op", "eof"
    text: str
    pos: int


@dataclass(frozen=True)
class ParseResult:
    poly: Poly
    variable_name: str
    # character offsets at which the variable occurs
    variable_positions: Tuple[int, ...] = ()


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            ch = text[pos]
            if ch == ".":
                raise ExpressionSyntaxError(
                    "decimal literals are not exact; write a rational such as 3/2", pos, text
                )
            raise ExpressionSyntaxError(f"unexpected character {ch!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            s = m.group()
            if s == "−":
                s = "-"
            if kind == "int" and m.end() < len(text) and text[m.end()] == ".":
                raise ExpressionSyntaxError(
                    "decimal literals are not exact; write a rational such as 3/2", m.end(), text
                )
            tokens.append(Token(kind, s, pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variable: Optional[str], max_exponent: int):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.var = variable
        self.var_positions: List[int] = []
        self.max_exponent = max_exponent

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, message, tok=None, cls=ExpressionSyntaxError):
        tok = tok or self.tok
        return cls(message, tok.pos, self.text)

    def describe(self, tok: Token) -> str:
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def is_op(self, *ops) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> ParseResult:
        if self.tok.kind == "eof":
            raise self.error("expected an expression, found end of input")
        poly = self.expr()
        if self.tok.kind != "eof":
            t = self.tok
            if t.kind == "op" and t.text == "/":
                raise self.error("'/' is only allowed inside a rational literal such as 2/3")
            if t.kind in ("ident", "int") or self.is_op("("):
                raise self.error(
                    f"expected an operator before {self.describe(t)}; write '*' for multiplication"
                )
            raise self.error(f"unexpected {self.describe(t)}")
        var = self.var or "x"
        return ParseResult(poly.with_var(var), var, tuple(self.var_positions))

    def expr(self) -> Poly:
        negate = False
        if self.is_op("-", "+"):
            negate = self.advance().text == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while self.is_op("+", "-"):
            op = self.advance().text
            negate = op == "-"
            if self.is_op("-", "+"):
                if self.advance().text == "-":
                    negate = not negate
            t = self.term()
            acc = acc - t if negate else acc + t
        return acc

    def term(self) -> Poly:
        acc, parenthesized = self.factor()
        while True:
            if self.is_op("*"):
                self.advance()
                f, parenthesized = self.factor()
            elif parenthesized and (self.is_op("(") or self.tok.kind == "ident"):
                f, parenthesized = self.factor()
            else:
                return acc
            acc = acc * f

    def factor(self) -> Tuple[Poly, bool]:
        base, parenthesized = self.base()
        if self.is_op("^"):
            self.advance()
            if self.is_op("-", "+") and self.tok.text == "-":
                raise self.error("negative exponents are not polynomial", cls=NegativeExponent)
            t = self.tok
            if t.kind != "int":
                raise self.error(f"expected a nonnegative integer exponent, found {self.describe(t)}")
            self.advance()
            k = int(t.text)
            if k > self.max_exponent:
                raise self.error(
                    f"exponent {k} exceeds the limit {self.max_exponent}", t, ExponentTooLarge
                )
            base = base ** k
        return base, parenthesized

    def base(self) -> Tuple[Poly, bool]:
        t = self.tok
        if t.kind == "int":
            self.advance()
            value = Fraction(int(t.text))
            if self.is_op("/"):
                self.advance()
                d = self.tok
                if d.kind != "int":
                    raise self.error(
                        f"expected a positive integer denominator, found {self.describe(d)}"
                    )
                if int(d.text) == 0:
                    raise self.error("denominator must be positive", d)
                self.advance()
                value /= int(d.text)
            if self.tok.kind == "ident":
                raise self.error(
                    f"expected an operator before {self.describe(self.tok)}; write '*' between a number and the variable"
                )
            return Poly.constant(value), False
        if t.kind == "ident":
            self.advance()
            if self.var is None:
                self.var = t.text
            elif t.text != self.var:
                raise self.error(
                    f"second variable {t.text!r}; only {self.var!r} may appear", t, MultipleVariables
                )
            self.var_positions.append(t.pos)
            return Poly((Fraction(0), Fraction(1))), False
        if self.is_op("("):
            self.advance()
            inner = self.expr()
            if not self.is_op(")"):
                raise self.error(f"expected ')', found {self.describe(self.tok)}")
            self.advance()
            return inner, True
        raise self.error(f"expected a number, variable or '(', found {self.describe(t)}")


def parse(text: str, variable: Optional[str] = None, max_exponent: int = DEFAULT_MAX_EXPONENT) -> ParseResult:
    """Parse ``text`` into an expanded polynomial.

    If ``variable`` is given, every identifier in ``text`` must equal it;
    otherwise the first identifier seen becomes the variable ("x" for
    constant inputs).
    """
    return _Parser(text, variable, max_exponent).parse()


def _power(var: str, k: int, style: str) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    if style == "latex" and k > 9:
        return f"{var}^{{{k}}}"
    return f"{var}^{k}"


def _magnitude(c: Fraction, style: str) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if style == "latex":
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def format_term(c: Fraction, k: int, var: str, style: str = "plain") -> str:
    """Render ``|c| * var^k`` without sign."""
    mag = abs(c)
    mono = _power(var, k, style)
    if not mono:
        return _magnitude(mag, style)
    if mag == 1:
        return mono
    sep = "*" if style == "plain" else " "
    return f"{_magnitude(mag, style)}{sep}{mono}"


def format_poly(f: Poly, style: str = "plain", var: Optional[str] = None) -> str:
    """Descending-power rendering; ``style`` is "plain" or "latex"."""
    if style not in ("plain", "latex"):
        raise ValueError(f"unknown style {style!r}")
    var = var or f.var
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        body = format_term(c, k, var, style)
        if not parts:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def format_rational(c: Fraction, style: str = "plain") -> str:
    s = _magnitude(abs(c), style)
    return "-" + s if c < 0 else s
