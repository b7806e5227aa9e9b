import random

import pytest

from boolecode.boolfn import BooleanFunction


@pytest.fixture
def and3() -> BooleanFunction:
    return BooleanFunction.from_support(3, [(1, 1, 1)])


def make_example_dnf(m: int) -> BooleanFunction:
    """Weight-2 function that is 1 exactly at the all-ones and all-zeros inputs."""
    return BooleanFunction.from_support(m, [(1,) * m, (0,) * m])


@pytest.fixture
def example_dnf4() -> BooleanFunction:
    return make_example_dnf(4)


def random_function(rng: random.Random, m: int, *, nonconstant: bool = True) -> BooleanFunction:
    while True:
        fn = BooleanFunction.random(m, rng)
        w = fn.weight()
        if not nonconstant or 0 < w < (1 << m):
            return fn


def random_sparse_support(rng: random.Random, m: int, max_w: int) -> BooleanFunction:
    w = rng.randint(1, min(max_w, (1 << m) - 1))
    vectors = set()
    while len(vectors) < w:
        vectors.add(tuple(rng.randrange(2) for _ in range(m)))
    return BooleanFunction.from_support(m, sorted(vectors))
