import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("arcphi", derandomize=True, deadline=None)
settings.load_profile("arcphi")


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))
