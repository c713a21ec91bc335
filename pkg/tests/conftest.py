import re

from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_CRITERIA: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"test_acceptance\.py::test_c(\d+)_", report.nodeid)
    if m:
        _CRITERIA.setdefault(m.group(1), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_CRITERIA, key=int):
        outcomes = _CRITERIA[key]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        passed = sum(o == "passed" for o in outcomes)
        terminalreporter.write_line(f"criterion {key}: {status} ({passed}/{len(outcomes)} checks)")
