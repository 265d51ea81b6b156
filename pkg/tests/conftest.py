import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from agifs import fixtures  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def g1():
    return fixtures.g1()


@pytest.fixture(scope="session")
def g2():
    return fixtures.g2()


@pytest.fixture(scope="session")
def raw_g1():
    return [[v - 1 for v in row] for row in fixtures.G1_ROWS]


@pytest.fixture(scope="session")
def raw_g2():
    return [[v - 1 for v in row] for row in fixtures.G2_ROWS]


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.summary_lines():
            terminalreporter.write_line(line)
