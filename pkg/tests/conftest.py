import pytest

from qatlas import cohomology as coh
from qatlas import sp6

# criterion lines collected by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def tables():
    return coh.load_tables()


@pytest.fixture(scope="session")
def group():
    return sp6.sp6()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
