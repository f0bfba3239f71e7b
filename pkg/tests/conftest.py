from fractions import Fraction
from functools import lru_cache

import pytest

from wrapkit.characterize import WrapParams
from wrapkit.construct import construct_wrapping


@lru_cache(maxsize=None)
def _wrapping(p, r, sign):
    return construct_wrapping(WrapParams(Fraction(p), Fraction(r), sign))


@pytest.fixture
def wrapping():
    """Cached constructed wrapping: wrapping("2", "1", 1)."""
    return _wrapping


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            props = dict(getattr(rep, "user_properties", []))
            if "criterion" in props and rep.when == "call":
                rows.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(rows):
            terminalreporter.write_line(f"[{verdict}] {name}")
