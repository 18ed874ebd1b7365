import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # test-local oracles


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


class QueuedRNG:
    """Stand-in generator returning scripted draws, for forcing the
    coefficient draws of the velocity updates."""

    def __init__(self, values):
        self.values = list(values)

    def uniform(self, low=0.0, high=1.0, size=None):
        assert size is None, "scripted rng only supports scalar draws"
        return self.values.pop(0)

    def random(self, size=None):
        if size is None:
            return self.values.pop(0)
        return np.array([self.values.pop(0) for _ in range(size)])

    def integers(self, low, high, size=None):
        if size is None:
            return int(self.values.pop(0))
        return np.array([int(self.values.pop(0)) for _ in range(size)])


@pytest.fixture
def queued_rng():
    return QueuedRNG
