from __future__ import annotations

import pytest

_results: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None or report.when != "call" and not report.failed:
        return
    number, text = marker
    ok = report.passed if report.when == "call" else False
    prev = _results.get(number, (text, True))[1]
    _results[number] = (text, prev and ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is not None:
        report.acceptance = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        text, ok = _results[number]
        terminalreporter.write_line(f"ACCEPTANCE {number:2d} {'PASS' if ok else 'FAIL'}: {text}")
