import pytest

from sturmian.exact import GOLDEN_ANGLE, QuadraticIrrational
from sturmian.words import SturmianSpec, prefix

SQRT3_ANGLE = QuadraticIrrational(-1, 1, 2, 3)
SQRT2_ANGLE = QuadraticIrrational(-1, 1, 1, 2)


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers",
        "slow: mark test as a long-running oracle sweep"
    )
    config.addinivalue_line(
        "markers",
        "property: mark test as a hypothesis property suite"
    )


@pytest.fixture
def fib_spec():
    """The Fibonacci word f."""
    return SturmianSpec.fibonacci()


@pytest.fixture(scope="session")
def fib_prefix():
    """First 5000 letters of the Fibonacci word."""
    return prefix(SturmianSpec.fibonacci(), 5000)


@pytest.fixture(params=[GOLDEN_ANGLE, SQRT3_ANGLE, SQRT2_ANGLE], ids=["golden", "sqrt3", "sqrt2"])
def angle(request):
    """The three reference angles."""
    return request.param
