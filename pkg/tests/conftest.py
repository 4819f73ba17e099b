import random
from math import gcd
from functools import reduce

import pytest

from modules.models import Quiver
from modules.quiver_core import make_quiver


def random_quiver(rng: random.Random, n: int, max_mult: int = 3) -> Quiver:
    """Upper-triangular multiplicities under a random vertex relabelling"""
    labels = list(range(n))
    rng.shuffle(labels)
    arrows = []
    for p in range(n):
        for q in range(p + 1, n):
            m = rng.randint(0, max_mult)
            if m:
                arrows.append((labels[p], labels[q], m))
    return make_quiver(n, arrows)


def random_dim_vector(rng: random.Random, n: int, max_entry: int = 3, indivisible: bool = True):
    while True:
        d = tuple(rng.randint(0, max_entry) for _ in range(n))
        if not any(d):
            continue
        if indivisible and reduce(gcd, d) != 1:
            continue
        return d


def random_vector(rng: random.Random, n: int, bound: int = 5):
    return tuple(rng.randint(-bound, bound) for _ in range(n))


@pytest.fixture
def k3():
    return make_quiver(2, [(0, 1, 3)])


@pytest.fixture
def s3():
    return make_quiver(4, [(i, 3, 1) for i in range(3)])
