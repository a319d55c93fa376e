import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hypercordial.corpus import GenParams, random_hypertree, random_small_hypertree
from hypercordial.hypergraph import Hypergraph


settings.register_profile("repo", deadline=None, max_examples=60)
settings.load_profile("repo")


def H(*edges, n=None):
    return Hypergraph.from_edges(edges, n=n)


def path(m):
    return H(*[(i, i + 1) for i in range(1, m + 1)])


def star(legs, size=2):
    """``legs`` edges of the given size sharing vertex 1."""
    edges = []
    nxt = 2
    for _ in range(legs):
        edges.append((1,) + tuple(range(nxt, nxt + size - 1)))
        nxt += size - 1
    return H(*edges)


def all_labelings(n, k):
    return itertools.product(range(k), repeat=n)


@st.composite
def hypertrees(draw, max_edges=30, size_max=4):
    seed = draw(st.integers(0, 2**63 - 1))
    m = draw(st.integers(1, max_edges))
    smax = draw(st.integers(2, size_max))
    return random_hypertree(GenParams(seed, m, 2, smax))


@st.composite
def small_hypertrees(draw, max_vertices=9):
    return random_small_hypertree(draw(st.integers(0, 2**63 - 1)), max_vertices, 2, 4)


@pytest.fixture
def two_disjoint_edges():
    return H((1, 2), (3, 4))
