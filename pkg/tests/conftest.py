import random

import pytest
from hypothesis import strategies as st

from ybsets import io
from ybsets.core import from_table

FIXTURES = (
    "perm3", "ex33b", "triv3", "triv4", "triv5", "triv3a", "triv3b",
    "dih3", "dih5", "q5", "ex517", "ex519", "ex64",
)


@pytest.fixture(scope="session")
def fixtures():
    return {name: io.load_fixture(name) for name in FIXTURES}


def random_qs(n: int, rng: random.Random):
    cells = [(x, y) for x in range(n) for y in range(n)]
    img = cells[:]
    rng.shuffle(img)
    return from_table(n, img)


@st.composite
def quadratic_sets(draw, max_n: int = 3):
    n = draw(st.integers(1, max_n))
    img = draw(st.permutations([(x, y) for x in range(n) for y in range(n)]))
    return from_table(n, img)
