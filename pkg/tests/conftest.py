from fractions import Fraction

import pytest

from nsjack.jack import JackTable

SAMPLE_ALPHAS = [Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 3), Fraction(11, 2)]

_TABLES = {}


def shared_table(n, alpha):
    """Tables are pure memo caches, so one per (n, alpha) is shared by the session."""
    key = (n, Fraction(alpha))
    if key not in _TABLES:
        _TABLES[key] = JackTable(n, alpha)
    return _TABLES[key]


@pytest.fixture
def table():
    return shared_table


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_ACCEPTANCE.items(), key=lambda kv: _criterion_key(kv[0])):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def _criterion_key(nodeid):
    name = nodeid.split("::")[-1]
    digits = "".join(ch for ch in name.split("_")[2] if ch.isdigit()) if name.count("_") >= 2 else ""
    return (int(digits) if digits else 99, name)
