from contextlib import contextmanager
from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from polycert import Poly

settings.register_profile("default", max_examples=200, deadline=None)
settings.register_profile("fast", max_examples=20, deadline=None)
settings.load_profile("default")

QUINTIC = "2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607"
QUINTIC_DESC = (2842, -7821, -16884, 10428, 5082, -2607)
QUARTIC = "(x-1)*(x-2)*(x-3)*(x-4)"
QUARTIC_DESC = (1, -10, 35, -50, 24)


@pytest.fixture
def quintic():
    return Poly.from_descending(QUINTIC_DESC, "n")


@pytest.fixture
def quartic():
    return Poly.from_descending(QUARTIC_DESC)


def rationals(max_num=50, max_den=12):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def nonneg_rationals(max_num=200, max_den=16):
    return st.builds(Fraction, st.integers(0, max_num), st.integers(1, max_den))


@st.composite
def polys(draw, max_degree=8, positive_leading=False, coeffs=None):
    if coeffs is None:
        coeffs = rationals()
    n = draw(st.integers(0, max_degree))
    body = draw(st.lists(coeffs, min_size=n, max_size=n))
    if positive_leading:
        lead = draw(st.builds(Fraction, st.integers(1, 20), st.integers(1, 6)))
    else:
        lead = draw(coeffs.filter(lambda c: c != 0))
    return Poly.from_descending([lead] + body)


# ---- acceptance reporting ------------------------------------------------

_ACCEPTANCE = []


@contextmanager
def _record(tag, title):
    try:
        yield
    except BaseException:
        _ACCEPTANCE.append(f"FAIL  {tag}  {title}")
        raise
    _ACCEPTANCE.append(f"PASS  {tag}  {title}")


@pytest.fixture
def criterion():
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1][1:])):
            terminalreporter.write_line(line)
