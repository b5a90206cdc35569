import re

_ACCEPTANCE_RESULTS = {}
_PATTERN = re.compile(r"test_acceptance\.py::test_(\d+)_")


def pytest_runtest_logreport(report):
    match = _PATTERN.search(report.nodeid)
    if match and report.when == "call":
        number = int(match.group(1))
        _ACCEPTANCE_RESULTS[number] = report.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_RESULTS):
        verdict = "PASS" if _ACCEPTANCE_RESULTS[number] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number}: {verdict}")
