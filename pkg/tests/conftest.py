from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from g2spec.exact import I, gq
from g2spec.exterior import ExteriorForm

settings.register_profile("default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=4)
gaussian = st.builds(lambda a, b: gq(a) + gq(b) * I, small_q, small_q)


def vectors(dim):
    return st.lists(small_q, min_size=dim, max_size=dim).map(lambda c: ExteriorForm.vector(dim, c))


def forms(dim, k, coeffs=small_q):
    from itertools import combinations

    idx = list(combinations(range(1, dim + 1), k))
    return st.lists(coeffs, min_size=len(idx), max_size=len(idx)).map(
        lambda cs: ExteriorForm(dim, {i: c for i, c in zip(idx, cs) if c})
    )


def frac(x):
    return Fraction(x)


# One line per acceptance criterion, printed after the run.
_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n.split("_")[1])):
        status = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")


@pytest.fixture(scope="session")
def ref():
    from g2spec.reference import packaged_reference

    return packaged_reference()
