"""Per-criterion PASS/FAIL summary for the acceptance suite.

Acceptance tests carry ``@pytest.mark.criterion(number, title)``.  After the
run, one line per criterion is printed, plus the ids of failing cases and any
``note`` properties recorded by reported-only checks.
"""

from __future__ import annotations

from collections import OrderedDict

import pytest

_results: OrderedDict[int, dict] = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _results.setdefault(number, {"title": title, "passed": 0, "failed": [], "skipped": 0, "notes": []})
    if report.when == "call" or (report.when == "setup" and not report.passed):
        if report.passed:
            entry["passed"] += 1
        elif report.skipped:
            entry["skipped"] += 1
        else:
            entry["failed"].append(item.name)
    if report.when == "call":
        entry["notes"] += [v for k, v in report.user_properties if k == "note"]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_results):
        e = _results[number]
        status = "FAIL" if e["failed"] else ("SKIP" if not e["passed"] else "PASS")
        tr.write_line(f"criterion {number}: {status}  {e['title']}  ({e['passed']} passed, {len(e['failed'])} failed)")
        for name in e["failed"]:
            tr.write_line(f"    failed: {name}")
        for note in e["notes"]:
            tr.write_line(f"    note: {note}")
