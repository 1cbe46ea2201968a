"""Collects acceptance-criterion outcomes and prints one line per criterion."""

import pytest

_CRITERIA = {}


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        number, title = marker.args
        _CRITERIA.setdefault(number, [title, True, []])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when == "teardown":
        return
    entry = _CRITERIA[marker.args[0]]
    if report.failed:
        entry[1] = False
    if report.when == "call":
        entry[2].extend(value for key, value in item.user_properties if key == "detail")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, details = _CRITERIA[number]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if details:
            line += f" ({'; '.join(details)})"
        terminalreporter.write_line(line)
