import random

import pytest

from galrep.cyclotomic import CycQ
from galrep.linalg import Matrix


def M(rows, N=1):
    return Matrix([[CycQ.rational(x, N) if not isinstance(x, CycQ) else x for x in r] for r in rows], N)


@pytest.fixture
def rng():
    return random.Random(20240607)
