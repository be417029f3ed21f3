import pytest
from hypothesis import settings

from modeq.numerics import Precision

settings.register_profile("modeq", max_examples=25, deadline=None)
settings.load_profile("modeq")

# lines recorded by the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def p100():
    return Precision.from_digits(100)


@pytest.fixture(scope="session")
def p60():
    return Precision.from_digits(60)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
