import sys

import pytest

from kmbranch import preset, winding_construct


@pytest.fixture(scope="session")
def A1():
    return preset("A1_1")


@pytest.fixture(scope="session")
def A2():
    return preset("A2_1")


@pytest.fixture(scope="session")
def L0(A1):
    return A1.fundamental(0)


@pytest.fixture(scope="session")
def L1(A1):
    return A1.fundamental(1)


@pytest.fixture(scope="session")
def W2(A1):
    return winding_construct(A1, 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
