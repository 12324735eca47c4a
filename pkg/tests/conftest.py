import pytest
from hypothesis import settings

from opposition.harness import structures_of_size
from opposition.instances import boolean, diamond, three_valued

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []

# small structures shared by property tests (all labelled structures up to 4 points)
SMALL_STRUCTURES = [s for n in range(1, 5) for s in structures_of_size(n)]


@pytest.fixture
def t3():
    return three_valued()


@pytest.fixture
def b2():
    return boolean()


@pytest.fixture
def d4():
    return diamond()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
