import pytest

_RESULTS: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion checked by this test")


@pytest.fixture
def acceptance(request):
    """Attach a measured detail to the criterion's summary line."""

    def record(number: int, detail: str):
        request.node._criterion_detail = detail

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or report.failed:
        passed = report.passed and report.when == "call"
        if number in _RESULTS and not _RESULTS[number][0]:
            return
        _RESULTS[number] = (passed, getattr(item, "_criterion_detail", None) or title)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        passed, detail = _RESULTS[number]
        terminalreporter.write_line(f"AC{number} {'PASS' if passed else 'FAIL'} {detail}")
