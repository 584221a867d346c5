import numpy as np
import pytest

from grover_sim.verify import random_state


@pytest.fixture
def rng():
    return np.random.default_rng(20240613)


@pytest.fixture
def make_random_state(rng):
    def make(n):
        return random_state(n, rng)

    return make
