import random
from fractions import Fraction

import pytest

from gradalg import (extended_quaternions, grassmann, quaternion_units,
                     quaternions, rationals)


@pytest.fixture(scope="session")
def H():
    return quaternions()

@pytest.fixture(scope="session")
def Q():
    return rationals()

@pytest.fixture(scope="session")
def EH():
    return extended_quaternions()

@pytest.fixture(scope="session")
def GR():
    return grassmann(2)

@pytest.fixture(scope="session")
def units(H):
    return quaternion_units(H)


@pytest.fixture
def rng():
    return random.Random(20230817)


def random_quaternion(rng, alg, bound=5, nonzero=False):
    i, j, k = quaternion_units(alg)
    while True:
        parts = [rng.randint(-bound, bound) for _ in range(4)]
        if nonzero and not any(parts):
            continue
        x, a, b, c = parts
        return alg.scalar(x) + i * a + j * b + k * c


def random_rational(rng, lo=-9, hi=9, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))
