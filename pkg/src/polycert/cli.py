"""``polycert`` command line.

    polycert <command> [--var x] [--shift R] [--mode integer|real]
             [--epsilon R] [--format text|json|latex] [--input FILE | EXPR]

Commands: certify, certify-at, threshold, bound, verify.  Exit status is
0 on success, 1 when the mathematical answer is negative (a certificate
with a negative coefficient, a failed verification) and 2 for usage or
input errors.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from . import report
from .bounds import DEFAULT_ROOT_EPSILON, lagrange_bound
from .errors import ParseError, PolycertError
from .parser import parse
from .search import DEFAULT_EPSILON, certify_minimal, minimal_integer_shift, optimal_threshold
from .shift import VerifyResult, certify_at, verify

COMMANDS = ("certify", "certify-at", "threshold", "bound", "verify")
EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

_POWER_RE = re.compile(r"^\s*(-?\d+)\s*\^\s*(-?\d+)\s*$")


class UsageError(PolycertError):
    pass


def parse_rational_arg(text: str) -> Fraction:
    """Exact rational from ``"5"``, ``"-3/4"``, ``"0.25"`` or ``"2^-20"``."""
    m = _POWER_RE.match(text)
    try:
        if m:
            return Fraction(int(m.group(1))) ** int(m.group(2))
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{text!r} is not an exact rational (use p/q, a decimal or 2^-k)") from None


@dataclass(frozen=True)
class CliRequest:
    command: str
    input: Optional[str] = None  # expression text, or certificate JSON for verify
    input_file: Optional[str] = None
    var: Optional[str] = None
    shift: Optional[Fraction] = None
    mode: str = "integer"
    epsilon: Optional[Fraction] = None
    output_format: str = "text"

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command == "certify-at" and self.shift is None:
            raise UsageError("certify-at requires --shift")
        if self.command != "certify-at" and self.shift is not None:
            raise UsageError(f"--shift is only accepted by certify-at, not {self.command}")
        if self.mode not in ("integer", "real"):
            raise UsageError(f"--mode must be integer or real, not {self.mode!r}")
        if self.output_format not in ("text", "json", "latex"):
            raise UsageError(f"--format must be text, json or latex, not {self.output_format!r}")
        if self.epsilon is not None and self.epsilon <= 0:
            raise UsageError(f"--epsilon must be positive, got {self.epsilon}")
        if (self.input is None) == (self.input_file is None):
            raise UsageError("give exactly one of an expression argument or --input FILE")


@dataclass(frozen=True)
class CliResult:
    status: int
    stdout: str = ""
    stderr: str = ""


def _read_source(request: CliRequest) -> str:
    if request.input_file is None:
        return request.input
    if request.input_file == "-":
        return sys.stdin.read()
    try:
        with open(request.input_file, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {request.input_file}: {e.strerror}") from None


def _emit(fmt: str, text, doc, latex) -> str:
    if fmt == "json":
        return report.dumps(doc())
    if fmt == "latex":
        return latex()
    return text()


def run(request: CliRequest) -> CliResult:
    try:
        request.validate()
        source = _read_source(request)
        if request.command == "verify":
            return _run_verify(request, source)
        poly = parse(source.strip(), request.var).poly
        return _run_poly_command(request, poly)
    except ParseError as e:
        return CliResult(EXIT_USAGE, stderr=f"parse error {e}\n")
    except PolycertError as e:
        return CliResult(EXIT_USAGE, stderr=f"error: {type(e).__name__}: {e}\n")


def _run_verify(request: CliRequest, source: str) -> CliResult:
    cert = report.certificate_from_json(source)
    result = verify(cert)
    out = _emit(
        request.output_format,
        lambda: str(result),
        lambda: report.verify_to_dict(result),
        lambda: f"% {result}\n{report.render_latex(cert)}",
    )
    return CliResult(EXIT_OK if result is VerifyResult.VALID else EXIT_NEGATIVE, out + "\n")


def _run_poly_command(request: CliRequest, poly) -> CliResult:
    fmt = request.output_format
    if request.command == "certify":
        eps = request.epsilon or DEFAULT_EPSILON
        cert = certify_minimal(poly, request.mode, eps)
        out = _emit(
            fmt,
            lambda: report.render_text(cert),
            lambda: report.certificate_to_dict(cert),
            lambda: report.render_latex(cert),
        )
        return CliResult(EXIT_OK, out + "\n")
    if request.command == "certify-at":
        cert = certify_at(poly, request.shift)
        out = _emit(
            fmt,
            lambda: report.render_text(cert),
            lambda: report.certificate_to_dict(cert),
            lambda: report.render_latex(cert),
        )
        status = EXIT_OK if cert.verdict else EXIT_NEGATIVE
        return CliResult(status, out + "\n")
    if request.command == "threshold":
        eps = request.epsilon or DEFAULT_EPSILON
        bracket = optimal_threshold(poly, eps)
        cert = certify_at(poly, bracket.hi)
        m = minimal_integer_shift(poly)
        out = _emit(
            fmt,
            lambda: report.render_threshold_text(cert, bracket, m),
            lambda: report.threshold_to_dict(cert, bracket, m),
            lambda: report.render_threshold_latex(cert, bracket, m),
        )
        return CliResult(EXIT_OK, out + "\n")
    # bound
    eps = request.epsilon or DEFAULT_ROOT_EPSILON
    bound = lagrange_bound(poly, eps)
    out = _emit(
        fmt,
        lambda: report.render_bound_text(poly, bound),
        lambda: report.bound_to_dict(poly, bound, eps),
        lambda: report.render_bound_latex(poly, bound),
    )
    return CliResult(EXIT_OK, out + "\n")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="polycert", description="Exact positivity certificates for univariate polynomials.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("expr", nargs="?", help="polynomial expression (for verify: certificate JSON file)")
    p.add_argument("--input", dest="input_file", metavar="FILE", help="read the expression or certificate from FILE ('-' for stdin)")
    p.add_argument("--var", help="variable name (required to match the expression)")
    p.add_argument("--shift", metavar="R", help="shift b for certify-at")
    p.add_argument("--mode", default="integer", choices=("integer", "real"))
    p.add_argument("--epsilon", metavar="R", help="bracket width (threshold, real mode) or root tolerance (bound)")
    p.add_argument("--format", dest="output_format", default="text", choices=("text", "json", "latex"))
    return p


_VALUE_OPTIONS = ("--input", "--var", "--shift", "--mode", "--epsilon", "--format")


def _protect_leading_minus(argv: List[str]) -> List[str]:
    # there are no short options, so "-x^2 + 1" can only be an expression
    out = []
    for i, arg in enumerate(argv):
        follows_option = i > 0 and argv[i - 1] in _VALUE_OPTIONS
        if arg.startswith("-") and not arg.startswith("--") and arg != "-" and not follows_option:
            out.append(" " + arg)
        else:
            out.append(arg)
    return out


def request_from_args(argv: List[str]) -> CliRequest:
    ns = build_parser().parse_intermixed_args(_protect_leading_minus(argv))
    text, path = ns.expr, ns.input_file
    if ns.command == "verify" and text is not None:
        if path is not None:
            raise UsageError("give either a certificate file argument or --input, not both")
        text, path = None, text
    return CliRequest(
        command=ns.command,
        input=text,
        input_file=path,
        var=ns.var,
        shift=None if ns.shift is None else parse_rational_arg(ns.shift),
        mode=ns.mode,
        epsilon=None if ns.epsilon is None else parse_rational_arg(ns.epsilon),
        output_format=ns.output_format,
    )


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        request = request_from_args(argv)
    except UsageError as e:
        sys.stderr.write(f"polycert: {e}\n")
        return EXIT_USAGE
    result = run(request)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
