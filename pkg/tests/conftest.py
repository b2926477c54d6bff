import re

_outcomes: dict[int, str] = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)$", report.nodeid)
    if not m:
        return
    number = int(m.group(1))
    if report.when == "call" or report.outcome != "passed":
        _outcomes[number] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        terminalreporter.write_line(
            f"criterion {number:2d}: {_outcomes[number]}  {CRITERIA[number]}")
