import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None)
settings.load_profile("default")


_criteria: dict[str, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "criterion":
            number, title = value
            _criteria[number] = (title, report.outcome.upper(), report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria, key=int):
        title, outcome, secs = _criteria[number]
        status = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({secs:.2f} s)")


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    request.node.user_properties.append(("criterion", marker.args))
    return marker.args
