import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


def random_pm1(rng, n):
    return rng.choice(np.array([-1, 1], dtype=np.int64), size=n)
