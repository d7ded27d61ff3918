from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict[int, str] = {}
_outcomes: dict[int, dict[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): test belongs to an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    _criteria[number] = title
    seen = _outcomes.setdefault(number, {})
    if report.failed:
        seen[item.nodeid] = False
    elif report.when == "call":
        seen.setdefault(item.nodeid, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_criteria):
        results = _outcomes.get(number, {})
        ok = bool(results) and all(results.values())
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  [{number:2d}] {_criteria[number]} ({sum(results.values())}/{len(results)} tests)")
