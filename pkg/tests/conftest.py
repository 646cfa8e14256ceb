import pytest

from quivmon.quiver import (
    a2,
    a3_linear,
    a3_sink,
    double_kronecker_chain,
    generalized_kronecker,
    kronecker,
    Quiver,
)


@pytest.fixture
def kron():
    return kronecker()


@pytest.fixture
def A2():
    return a2()


@pytest.fixture
def A3():
    return a3_linear()


@pytest.fixture
def sink():
    return a3_sink()


@pytest.fixture
def chain():
    return double_kronecker_chain()


@pytest.fixture
def kron3():
    return generalized_kronecker(3)


def a3_source():
    return Quiver(("1", "2", "3"), (("2", "1"), ("2", "3")))


DYNKIN_SMALL = [a2(), a3_linear(), a3_sink(), a3_source()]


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
