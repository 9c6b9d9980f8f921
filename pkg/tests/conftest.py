import os

import pytest

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")

_acceptance = {}


@pytest.fixture
def fixture_path():
    return lambda name: os.path.join(FIXTURES, name)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if name.startswith("test_criterion_"):
        num = int(name.split("_")[2])
        _acceptance[num] = (name, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance):
        name, status = _acceptance[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  {name}")
