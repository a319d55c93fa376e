import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypercordial.errors import ContractViolation
from hypercordial.hypergraph import Hypergraph
from hypercordial.labeler import label
from hypercordial.labeling import Labeling, is_k_cordial
from hypercordial.oracle import Decision, count_k_cordial, exists_k_cordial

from conftest import H, path, small_hypertrees


def brute_count(T, k):
    return sum(
        1 for f in itertools.product(range(k), repeat=T.n) if is_k_cordial(T, Labeling(k, f))
    )


def test_disjoint_edges_unsat(two_disjoint_edges):
    res = exists_k_cordial(two_disjoint_edges, 2)
    assert res.decision is Decision.EXHAUSTED_UNSAT and res.witness is None


def test_single_edge_sat():
    res = exists_k_cordial(path(1), 2)
    assert res.decision is Decision.WITNESS_FOUND
    assert is_k_cordial(path(1), res.witness)


def test_path_k3_sat():
    res = exists_k_cordial(path(3), 3)
    assert res.decision is Decision.WITNESS_FOUND and is_k_cordial(path(3), res.witness)


def test_budget_gives_indeterminate():
    T = Hypergraph(6, ((1, 2), (3, 4), (5, 6)))
    res = exists_k_cordial(T, 2, budget=3)
    assert res.decision is Decision.INDETERMINATE


def test_counts():
    assert count_k_cordial(Hypergraph(2), 2) == 2
    assert count_k_cordial(path(1), 2) == 2
    # frozen from brute_count over the 8 labelings
    assert count_k_cordial(path(2), 2) == 4 == brute_count(path(2), 2)


def test_count_size_guard():
    with pytest.raises(ContractViolation):
        count_k_cordial(path(12), 2)


def test_k_at_least_two():
    with pytest.raises(ContractViolation):
        exists_k_cordial(path(1), 1)


@given(small_hypertrees(max_vertices=7), st.integers(2, 4))
def test_count_matches_brute_force(T, k):
    assert count_k_cordial(T, k) == brute_count(T, k)


@given(small_hypertrees(max_vertices=8), st.integers(2, 5))
def test_decision_matches_count(T, k):
    res = exists_k_cordial(T, k)
    assert (res.decision is Decision.WITNESS_FOUND) == (count_k_cordial(T, k) > 0)
    if res.witness is not None:
        assert is_k_cordial(T, res.witness)
    assert res.nodes_explored <= k**T.n


@given(small_hypertrees(max_vertices=12), st.sampled_from([2, 3]))
def test_agrees_with_labeler(T, k):
    assert exists_k_cordial(T, k).decision is Decision.WITNESS_FOUND
    f, _ = label(T, k)
    assert is_k_cordial(T, f)


@given(small_hypertrees(max_vertices=8), st.integers(2, 4), st.randoms(use_true_random=False))
def test_decision_ignores_vertex_order(T, k, rnd):
    perm = list(T.vertices())
    rnd.shuffle(perm)
    T2 = Hypergraph(T.n, tuple(tuple(perm[v - 1] for v in e) for e in T.edges))
    assert exists_k_cordial(T, k).decision == exists_k_cordial(T2, k).decision
    assert count_k_cordial(T, k) == count_k_cordial(T2, k)


def test_matchings_match_brute_force():
    for m in range(1, 5):
        F = Hypergraph(2 * m, tuple((2 * i + 1, 2 * i + 2) for i in range(m)))
        expected = Decision.WITNESS_FOUND if brute_count(F, 2) else Decision.EXHAUSTED_UNSAT
        assert exists_k_cordial(F, 2).decision is expected
