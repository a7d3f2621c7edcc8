import pytest

from mhpartial.exact import Field
from mhpartial.families import cyclic, function_algebra, group_algebra, indicator
from mhpartial.construct import build_h_coaction


@pytest.fixture(scope="session")
def Q():
    return Field.rationals()


@pytest.fixture(scope="session")
def F7():
    return Field.prime(7)


@pytest.fixture(scope="session")
def AZ4(Q):
    return function_algebra(cyclic(4), Q)


@pytest.fixture(scope="session")
def kZ2(Q):
    return group_algebra(cyclic(2), Q)


@pytest.fixture(scope="session")
def h02(kZ2, AZ4):
    """Y = kZ2 over A_Z4 through the indicator of {0, 2}."""
    return build_h_coaction(kZ2, AZ4, indicator(AZ4, [0, 2]))


@pytest.fixture(scope="session")
def h_one(kZ2, AZ4):
    return build_h_coaction(kZ2, AZ4, indicator(AZ4, [0, 1, 2, 3]))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
