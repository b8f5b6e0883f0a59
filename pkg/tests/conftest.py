import pytest

from kleingrass import QuadraticForm, build_grassmannian, off_quadric_structure
from kleingrass import fixtures as published
from kleingrass.fixtures import row_labels


@pytest.fixture(scope="session")
def canonical():
    return QuadraticForm.canonical()


@pytest.fixture(scope="session")
def off_structure():
    return off_quadric_structure()


@pytest.fixture(scope="session")
def tagged_off_structure():
    return published.tagged_off_structure()


@pytest.fixture(scope="session")
def g28():
    return build_grassmannian(2, 8)


@pytest.fixture(scope="session")
def rows():
    """Table row number -> point label."""
    return row_labels()


@pytest.fixture(scope="session")
def bijection():
    return published.published_certificate()


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and (report.when == "call" or report.failed):
        _criteria.append((marker.args[0], marker.args[1], report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_criteria):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")
