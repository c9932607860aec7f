import pytest
from hypothesis import strategies as st

from orthodiff.exactfield import GaussianRational

ACCEPTANCE_LINES: list[str] = []


def rationals(span=50, nonzero=False):
    s = st.fractions(min_value=-span, max_value=span, max_denominator=20)
    return s.filter(bool) if nonzero else s


def gaussians(span=20, nonzero=False):
    s = st.builds(GaussianRational, rationals(span), rationals(span))
    return s.filter(bool) if nonzero else s


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion."""

    def _record(label: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
