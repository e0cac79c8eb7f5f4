from fractions import Fraction

import pytest

from oblique_simson import EXACT, Params, Point, build_scene


def E(value):
    """Exact scalar from int / Fraction / 'p/q' string."""
    if isinstance(value, str):
        value = Fraction(value)
    return EXACT.scalar(value)


def P(x, y):
    """Exact point from int / Fraction / 'p/q' string coordinates."""
    return Point(E(x), E(y))


@pytest.fixture(scope="session")
def golden_params():
    return Params.make(1, 2, 3, Fraction(1, 2))


@pytest.fixture(scope="session")
def golden_scene(golden_params):
    return build_scene(golden_params)


@pytest.fixture(scope="session")
def classical_scene():
    return build_scene(Params.make(1, 2, 3, 0))
