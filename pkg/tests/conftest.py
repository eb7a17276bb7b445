import numpy as np
import pytest

from circrob import DissimilarityMatrix, circle_instance, counterexample_fixture


def random_space(n, rng, ints=False):
    """Symmetric, zero-diagonal, positive-off-diagonal random matrix."""
    if ints:
        vals = rng.integers(1, 6, size=(n, n)).astype(float)
    else:
        vals = rng.uniform(0.5, 3.0, size=(n, n))
    vals = np.triu(vals, 1)
    return DissimilarityMatrix(vals + vals.T)


def mixed_small_space(rng, n_lo=3, n_hi=7):
    """Random draw from the pool used by the oracle cross-checks: random
    real/integer values, circles, lightly perturbed circles."""
    from circrob import perturb

    kind = int(rng.integers(0, 5))
    n = int(rng.integers(n_lo, n_hi + 1))
    if kind == 0:
        return circle_instance(n, "arc")
    if kind == 1:
        return circle_instance(n, "chord")
    if kind == 2:
        base = circle_instance(n, "chord")
        return perturb(base, 0.02, seed=int(rng.integers(1 << 30)))
    return random_space(n, rng, ints=kind == 3)


@pytest.fixture
def fixture4():
    return counterexample_fixture()


@pytest.fixture
def circle5():
    return circle_instance(5, "arc")


@pytest.fixture
def equilateral4():
    return DissimilarityMatrix(np.ones((4, 4)) - np.eye(4))
