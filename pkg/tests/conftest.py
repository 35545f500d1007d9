import random

import pytest
from hypothesis import settings

from hermia.digraph import Digraph, PairState, digraph_from_edges
from hermia.enumeration import build_corpus

settings.register_profile("ci", deadline=None, max_examples=60)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def corpus3():
    return build_corpus(3)


@pytest.fixture(scope="session")
def corpus4():
    return build_corpus(4)


@pytest.fixture(scope="session")
def corpus5():
    return build_corpus(5)


def random_digraph(rng: random.Random, n: int) -> Digraph:
    pairs = {}
    for u in range(n):
        for v in range(u + 1, n):
            state = rng.randrange(4)
            if state:
                pairs[(u, v)] = PairState(state)
    return Digraph(n, pairs)


@pytest.fixture
def rng():
    return random.Random(20240815)
