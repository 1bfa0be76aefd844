import pytest

from monoideal.config.settings import settings
from monoideal.core.ideal import MonomialIdeal


@pytest.fixture(autouse=True)
def restore_settings():
    """Tests may override settings; put the originals back afterwards."""
    snapshot = settings.model_dump()
    yield
    settings.overrides(**snapshot)


@pytest.fixture
def identity_ideal() -> MonomialIdeal:
    """<x1^2*x3^2, x1*x2*x3^2>, whose symbolic powers are <x1^k*x3^2k>."""
    return MonomialIdeal.from_exponents([[2, 0, 2], [1, 1, 2]], 3)


@pytest.fixture
def lex_ideal() -> MonomialIdeal:
    """A lexsegment ideal whose square is not lexsegment."""
    return MonomialIdeal.from_exponents(
        [[3, 0, 0], [2, 1, 0], [2, 0, 1], [1, 2, 0], [1, 1, 1]], 3
    )


@pytest.fixture
def stable_ideal() -> MonomialIdeal:
    return MonomialIdeal.from_exponents([[3, 0], [2, 1], [1, 2]], 2)


@pytest.fixture
def squarefree_six() -> MonomialIdeal:
    """<x1x2x3, x1x4x5, x2x4x6, x3x5x6>: integrally closed, I^2 is not."""
    return MonomialIdeal.from_exponents(
        [
            [1, 1, 1, 0, 0, 0],
            [1, 0, 0, 1, 1, 0],
            [0, 1, 0, 1, 0, 1],
            [0, 0, 1, 0, 1, 1],
        ],
        6,
    )


@pytest.fixture
def seeds() -> range:
    """Instances per class in the property suites."""
    return range(200)


@pytest.fixture
def sample_seeds() -> range:
    """A smaller run for suites that take powers or closures."""
    return range(40)
