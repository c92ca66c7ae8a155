import os

import hypothesis
import pytest

from core.tools.config import clear_guard_overrides
from tests.fixtures import fixture_ideal

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=400, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(autouse=True)
def _no_guard_overrides():
    yield
    clear_guard_overrides()


@pytest.fixture
def triangle():
    return fixture_ideal("triangle")


@pytest.fixture
def complete_intersection():
    return fixture_ideal("complete_intersection")


@pytest.fixture
def x_squared():
    return fixture_ideal("x_squared")


@pytest.fixture
def x_xy():
    return fixture_ideal("x_xy")


@pytest.fixture
def max_ideal_square():
    return fixture_ideal("max_ideal_square")


@pytest.fixture
def nine_variable():
    return fixture_ideal("nine_variable")


@pytest.fixture
def higher_product():
    return fixture_ideal("higher_product")
