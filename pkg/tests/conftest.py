from fractions import Fraction

import pytest
from hypothesis import settings

from axialtools.catalog import make_law

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def monster():
    return make_law("monster", Fraction(1, 4), Fraction(1, 32))
