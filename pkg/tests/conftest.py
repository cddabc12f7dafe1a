import os
import sys

import pytest
from hypothesis import settings, HealthCheck

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.schema import TorusAction  # noqa: E402
from tests.strategies import seeded_corpus  # noqa: E402

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def u23() -> TorusAction:
    """Three columns in general position in the plane: the circuit U_{2,3}."""
    return TorusAction.from_rows([[1, 0, 1], [0, 1, 1]])


@pytest.fixture
def identity2() -> TorusAction:
    return TorusAction.from_rows([[1, 0], [0, 1]])


@pytest.fixture(scope="session")
def corpus():
    return seeded_corpus()
