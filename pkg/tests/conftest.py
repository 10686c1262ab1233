import numpy as np
import pytest

from shimorin_lab.measure import catalog


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
