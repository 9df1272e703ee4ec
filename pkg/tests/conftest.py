import pytest

from skewcode import QuotientContext, RingSpec, SkewRing
from skewcode.ring import AutomorphismPair

# filled by test_acceptance.py, printed once at the end of the session
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture(scope="session")
def gf4():
    return RingSpec.from_name("gf4")


@pytest.fixture(scope="session")
def gf9():
    return RingSpec.from_name("gf9")


@pytest.fixture(scope="session")
def z4():
    return RingSpec.from_name("z4")


@pytest.fixture(scope="session")
def S4(gf4):
    """GF(4) with rho = theta = Frobenius."""
    return SkewRing(gf4, AutomorphismPair(1, 1))


@pytest.fixture(scope="session")
def S9(gf9):
    return SkewRing(gf9, AutomorphismPair(1, 1))


@pytest.fixture(scope="session")
def ctx4(gf4):
    return QuotientContext.create(gf4, 1, 1, 2, 2, 1, 1)


@pytest.fixture(scope="session")
def ctx9(gf9):
    return QuotientContext.create(gf9, 1, 1, 2, 2, 1, 1)


@pytest.fixture(scope="session")
def ctx9_2(gf9):
    return QuotientContext.create(gf9, 1, 1, 2, 2, 2, 2)
