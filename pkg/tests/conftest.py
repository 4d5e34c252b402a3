import numpy as np
import pytest


def random_complex(rng, n):
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2 * n)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
