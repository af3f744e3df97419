import pytest

ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    key = marker.args[0]
    status = "PASS" if report.passed else "FAIL"
    previous = ACCEPTANCE.get(key)
    if previous is None or previous[0] == "PASS":
        ACCEPTANCE[key] = (status, marker.args[1])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key, title): acceptance criterion covered by a test")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k)):
        status, title = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {status}  {title}")
