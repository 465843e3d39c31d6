import numpy as np
import pytest
from hypothesis import settings

from apexgon import random_convex, validate_polygon

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

SQUARE = validate_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def rand_poly(n, seed):
    return random_convex(n, np.random.default_rng([seed, n]))


@pytest.fixture
def square():
    return SQUARE
