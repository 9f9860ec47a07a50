import re

_RESULTS = {}
_NAME = re.compile(r"test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if not m:
        return
    k = int(m.group(1))
    if report.when == "call" or report.failed:
        if report.failed or k not in _RESULTS:
            _RESULTS[k] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        verdict = _RESULTS.get(k, "NOT RUN")
        terminalreporter.write_line(f"[{verdict}] {k}. {CRITERIA[k]}")
