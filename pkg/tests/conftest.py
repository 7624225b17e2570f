_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1].removeprefix("test_")
        _ACCEPTANCE[name] = (report.passed, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (passed, duration) in _ACCEPTANCE.items():
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  ({duration:.2f}s)")
