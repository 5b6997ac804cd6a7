"""公共夹具：带种子的随机数与随机元素生成。"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from voa.finite_lie import LieElement, lie_algebra

SAMPLES = 100


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240607)


def random_lie_element(l: int, rng: random.Random, density: float = 0.4) -> LieElement:
    algebra = lie_algebra(l)
    coords = {
        index: Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
        for index in range(algebra.dimension)
        if rng.random() < density
    }
    return algebra.compose(coords)
