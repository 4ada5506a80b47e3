"""Rendering and serialization of certificates and search results.

JSON layout (``"schema": "polycert-cert-v1"``)::

    {
      "schema": "polycert-cert-v1",
      "variable": "n",
      "input": [["2842", "1"], ["-7821", "1"], ...],   # descending, num/den
      "shift": ["5", "1"],
      "quotient": [["2842", "1"], ...],               # descending
      "remainder": ["2166128", "1"],
      "verdict": "AllNonnegative" | "HasNegative",
      "first_negative_index": null | "1"
    }

Every number is a decimal string.  Threshold output adds a
``"threshold"`` object to the same document, so it can be fed straight
to ``verify``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, Optional

from .bounds import BoundReport
from .errors import PolycertError
from .parser import format_poly, format_rational
from .poly import Poly
from .search import ThresholdBracket
from .shift import Certificate, Scan, VerifyResult

CERT_SCHEMA = "polycert-cert-v1"
BOUND_SCHEMA = "polycert-bound-v1"
VERIFY_SCHEMA = "polycert-verify-v1"


class CertificateFormatError(PolycertError):
    pass


def verdict_label(scan: Scan) -> str:
    return "AllNonnegative" if scan else f"HasNegative({scan.first_offending})"


def _pair(c: Fraction):
    return [str(c.numerator), str(c.denominator)]


def _unpair(obj, where: str) -> Fraction:
    if (
        not isinstance(obj, list)
        or len(obj) != 2
        or not all(isinstance(s, str) for s in obj)
    ):
        raise CertificateFormatError(f"{where}: expected a [numerator, denominator] pair of strings")
    try:
        num, den = int(obj[0]), int(obj[1])
    except ValueError:
        raise CertificateFormatError(f"{where}: {obj!r} is not a pair of decimal integers") from None
    if den <= 0:
        raise CertificateFormatError(f"{where}: denominator {den} is not positive")
    return Fraction(num, den)


def _index(obj, where: str) -> int:
    if not isinstance(obj, str) or not obj.isdigit():
        raise CertificateFormatError(f"{where}: expected a decimal string, got {obj!r}")
    return int(obj)


def certificate_to_dict(cert: Certificate) -> Dict[str, Any]:
    return {
        "schema": CERT_SCHEMA,
        "variable": cert.var,
        "input": [_pair(c) for c in cert.input_poly.descending()],
        "shift": _pair(cert.shift_b),
        "quotient": [_pair(c) for c in cert.quotient_coefficients],
        "remainder": _pair(cert.remainder),
        "verdict": "AllNonnegative" if cert.verdict else "HasNegative",
        "first_negative_index": (
            None if cert.verdict else str(cert.verdict.first_offending)
        ),
    }


def certificate_from_dict(doc: Dict[str, Any]) -> Certificate:
    if not isinstance(doc, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    if doc.get("schema") != CERT_SCHEMA:
        raise CertificateFormatError(f"schema: expected {CERT_SCHEMA!r}, got {doc.get('schema')!r}")
    for key in ("variable", "input", "shift", "quotient", "remainder", "verdict"):
        if key not in doc:
            raise CertificateFormatError(f"missing field {key!r}")
    var = doc["variable"]
    if not isinstance(var, str) or not var:
        raise CertificateFormatError("variable: expected a nonempty string")
    for key in ("input", "quotient"):
        if not isinstance(doc[key], list):
            raise CertificateFormatError(f"{key}: expected a list of pairs")
    coeffs = [_unpair(c, f"input[{i}]") for i, c in enumerate(doc["input"])]
    if not coeffs:
        raise CertificateFormatError("input: empty coefficient list")
    quotient = tuple(_unpair(c, f"quotient[{i}]") for i, c in enumerate(doc["quotient"]))
    if doc["verdict"] == "AllNonnegative":
        verdict = Scan()
    elif doc["verdict"] == "HasNegative":
        verdict = Scan(_index(doc.get("first_negative_index"), "first_negative_index"))
    else:
        raise CertificateFormatError(f"verdict: unknown value {doc['verdict']!r}")
    return Certificate(
        input_poly=Poly.from_descending(coeffs, var),
        shift_b=_unpair(doc["shift"], "shift"),
        quotient_coefficients=quotient,
        remainder=_unpair(doc["remainder"], "remainder"),
        verdict=verdict,
    )


def dumps(doc: Dict[str, Any]) -> str:
    """One top-level field per line, values compact."""
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items())
    return "{\n" + body + "\n}"


def certificate_to_json(cert: Certificate) -> str:
    return dumps(certificate_to_dict(cert))


def certificate_from_json(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateFormatError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return certificate_from_dict(doc)


def threshold_to_dict(cert: Certificate, bracket: ThresholdBracket, integer_shift: int) -> Dict[str, Any]:
    doc = certificate_to_dict(cert)
    doc["threshold"] = {
        "lo": _pair(bracket.lo),
        "hi": _pair(bracket.hi),
        "epsilon": _pair(bracket.epsilon),
        "exact": None if bracket.exact is None else _pair(bracket.exact),
        "witness_index_p": str(bracket.witness_index_p),
        "zero_indices": [str(k) for k in bracket.zero_indices],
        "degenerate": bracket.degenerate,
        "minimal_integer_shift": str(integer_shift),
    }
    return doc


def bound_to_dict(f: Poly, report: Optional[BoundReport], epsilon: Fraction) -> Dict[str, Any]:
    doc = {
        "schema": BOUND_SCHEMA,
        "variable": f.var,
        "input": [_pair(c) for c in f.descending()],
        "epsilon": _pair(epsilon),
        "no_negative_coefficients": report is None,
    }
    if report is not None:
        doc.update(
            first_negative_index_k=str(report.first_negative_index_k),
            magnitude_B=_pair(report.magnitude_B),
            bound_overestimate=_pair(report.bound_overestimate),
            slack=_pair(report.slack),
        )
    return doc


# ---- human-readable renderings ------------------------------------------


def _linear(var: str, b: Fraction, style: str) -> str:
    return f"{var} - {format_rational(b, style)}"


def _tail(r: Fraction, style: str) -> str:
    s = format_rational(abs(r), style)
    return f"- {s}" if r < 0 else f"+ {s}"


def render_identity(cert: Certificate, style: str = "plain") -> str:
    """``(q)(x - b) + r`` with zero quotient terms omitted."""
    var = cert.var
    q = format_poly(cert.quotient_poly(), style, var)
    sep = "*" if style == "plain" else ""
    return f"({q}){sep}({_linear(var, cert.shift_b, style)}) {_tail(cert.remainder, style)}"


def render_latex(cert: Certificate, lhs: bool = True) -> str:
    """LaTeX identity, e.g. ``f(n) \\equiv (2842 n^4 + ...)(n - 5) + 2166128``."""
    body = render_identity(cert, "latex")
    return f"f({cert.var}) \\equiv {body}" if lhs else body


def render_text(cert: Certificate) -> str:
    var = cert.var
    lines = [
        f"f({var}) = {format_poly(cert.input_poly)}",
        f"shift b = {format_rational(cert.shift_b)}",
        f"f({var}) = {render_identity(cert)}",
        f"verdict: {verdict_label(cert.verdict)}",
    ]
    if cert.verdict:
        lines.append(f"f({var}) > 0 for all {var} > {format_rational(cert.shift_b)}")
    return "\n".join(lines)


def render_threshold_text(cert: Certificate, bracket: ThresholdBracket, integer_shift: int) -> str:
    lines = [render_text(cert)]
    if bracket.degenerate:
        lines.append("no negative coefficient: threshold is 0")
    elif bracket.exact is not None:
        lines.append(f"optimal shift b* = {format_rational(bracket.exact)} (exact)")
    else:
        lines.append(
            f"optimal shift b* in ({format_rational(bracket.lo)}, {format_rational(bracket.hi)}]"
            f"  ~ {float(bracket.hi):.9g}, width <= {format_rational(bracket.epsilon)}"
        )
    lines.append(f"binding index p = {bracket.witness_index_p}")
    if bracket.zero_indices:
        lines.append("zero at hi: " + ", ".join(f"f_{k}" for k in bracket.zero_indices))
    lines.append(f"minimal integer shift = {integer_shift}")
    return "\n".join(lines)


def render_threshold_latex(cert: Certificate, bracket: ThresholdBracket, integer_shift: int) -> str:
    lo, hi = format_rational(bracket.lo, "latex"), format_rational(bracket.hi, "latex")
    if bracket.exact is not None:
        where = f"b^* = {format_rational(bracket.exact, 'latex')}"
    else:
        where = f"{lo} < b^* \\le {hi}"
    return f"{render_latex(cert)}\n% {where}, minimal integer shift {integer_shift}"


def render_bound_text(f: Poly, report: Optional[BoundReport]) -> str:
    var = f.var
    head = f"f({var}) = {format_poly(f)}"
    if report is None:
        return f"{head}\nno negative coefficients: f has no positive root"
    k, B = report.first_negative_index_k, report.magnitude_B
    lines = [
        head,
        f"first negative coefficient index k = {k}",
        f"largest negative magnitude B = {format_rational(B)}",
        f"bound 1 + (B/a_0)^(1/{k}) <= {format_rational(report.bound_overestimate)}"
        f"  ~ {float(report.bound_overestimate):.9g}",
        f"overshoot <= {format_rational(report.slack)}",
        f"f({var}) > 0 for all {var} > {format_rational(report.bound_overestimate)}",
    ]
    return "\n".join(lines)


def render_bound_latex(f: Poly, report: Optional[BoundReport]) -> str:
    var = f.var
    if report is None:
        return f"{var} > 0 \\implies f({var}) > 0"
    k = report.first_negative_index_k
    ratio = format_rational(report.magnitude_B / f.leading_coefficient(), "latex")
    root = ratio if k == 1 else f"\\sqrt[{k}]{{{ratio}}}"
    return (
        f"{var} > {format_rational(report.bound_overestimate, 'latex')} \\ge 1 + {root}"
        f" \\implies f({var}) > 0"
    )


def verify_to_dict(result: VerifyResult) -> Dict[str, Any]:
    return {"schema": VERIFY_SCHEMA, "result": result.value}
