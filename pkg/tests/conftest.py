"""Collects per-criterion outcomes for the acceptance summary."""
from __future__ import annotations

from collections import defaultdict

_criterion_of: dict[str, int] = {}
_outcomes: dict[int, list[tuple[str, bool]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criterion_of[item.nodeid] = int(mark.args[0])


def pytest_runtest_logreport(report):
    crit = _criterion_of.get(report.nodeid)
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _outcomes[crit].append((report.nodeid.split("::")[-1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_outcomes):
        results = _outcomes[crit]
        failed = [name for name, ok in results if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {crit}: {status} ({len(results) - len(failed)}/{len(results)} checks)"
        if failed:
            line += " -- failing: " + ", ".join(failed)
        tr.write_line(line)
