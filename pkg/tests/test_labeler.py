import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercordial.errors import ContractViolation, NotAHypertreeError
from hypercordial.helpful import find_helpful_configuration
from hypercordial.hypergraph import Hypergraph
from hypercordial.labeler import ascending_pivot, label, label_strong, pair_labels
from hypercordial.labeling import edge_labels, histogram, is_k_cordial, is_strong_on

import tables
from conftest import H, hypertrees, path, star


def test_single_edge_k2():
    f, trace = label(path(1), 2)
    assert is_k_cordial(path(1), f) and sorted(f.labels) == [0, 1]
    assert trace.case == 1


def test_path_k3():
    T = path(3)
    f, _ = label(T, 3)
    assert sorted(edge_labels(T, f)) == [0, 1, 2]
    assert histogram(T, f).vertex_spread <= 1


def test_two_star_k2_is_strong():
    T = star(2)
    f, trace = label(T, 2)
    assert trace.config == (1,)
    assert is_strong_on(T, f, {1})


def test_four_star_strong():
    T = star(4)
    f = label_strong(T, 2, 1)
    assert is_k_cordial(T, f) and is_strong_on(T, f, {1})
    _, trace = label(T, 2)
    assert len(trace.steps) == 2
    assert all(s.relation == "fully-incident" for s in trace.steps)


def test_six_edge_path_strong():
    T = path(6)
    A = find_helpful_configuration(T)
    f = label_strong(T, 3, A)
    assert is_strong_on(T, f, A.vertices)


def test_edgeless_pair():
    T = Hypergraph(2)
    f = label_strong(T, 3, 1)
    assert len(set(f.labels)) == 2


def test_label_strong_rejects_bad_pivot():
    with pytest.raises(ContractViolation):
        label_strong(path(2), 2, 1)
    with pytest.raises(ContractViolation):
        label_strong(path(3), 2, 2)


def test_rejects_forest(two_disjoint_edges):
    with pytest.raises(NotAHypertreeError):
        label(two_disjoint_edges, 2)


def test_rejects_other_k():
    with pytest.raises(ContractViolation):
        label(path(4), 4)


def test_rejects_unknown_pair_rule():
    with pytest.raises(ContractViolation):
        label(path(2), 3, pair_rule="guess")


def test_ascending_pivot_exists_for_balanced_counts():
    for counts in itertools.product(range(4), repeat=3):
        if max(counts) - min(counts) > 1:
            continue
        a = ascending_pivot(counts)
        assert counts[a] <= counts[(a + 1) % 3] <= counts[(a + 2) % 3]
        assert not any(
            counts[b] <= counts[(b + 1) % 3] <= counts[(b + 2) % 3] for b in range(a)
        )


@pytest.mark.parametrize("a, b, d", list(itertools.product(range(3), repeat=3)))
def test_leaf_pair_rows(a, b, d):
    y1, y2 = b, (b + d) % 3
    c1, c2, c3, c4 = tables.LEAF_PAIR[d]
    p, q = pair_labels(y1, y2, a)
    assert (p, q) == ((a + c1) % 3, (a + c2) % 3)
    e1, e2 = (y1 + p) % 3, (y2 + q) % 3
    assert e1 == (a + b + c3) % 3
    if d == 1:
        # recorded as a + b + 1; the row's own leaf labels give a + b + 2
        assert e2 == (a + b + 2) % 3
    else:
        assert e2 == (a + b + c4) % 3
    assert e1 != e2


@given(hypertrees(max_edges=40), st.sampled_from([2, 3]))
def test_labels_every_hypertree(T, k):
    f, trace = label(T, k, check_steps=True)
    assert is_k_cordial(T, f)
    if T.m % k == 0 and trace.config:
        assert is_strong_on(T, f, trace.config)


@given(hypertrees(max_edges=40), st.sampled_from([2, 3]))
def test_trace_replay(T, k):
    f, trace = label(T, k)
    assert trace.replay(T.n) == f.labels


@given(hypertrees(max_edges=40))
def test_recursion_depth(T):
    for k in (2, 3):
        _, trace = label(T, k)
        assert len(trace.steps) == (T.m - T.m % k) // k
        assert [s.edges_before for s in trace.steps] == list(range(T.m - T.m % k, 0, -k))


@settings(max_examples=60)
@given(hypertrees(max_edges=40))
def test_search_rule_agrees_on_validity(T):
    if T.m % 3 != 2:
        return
    f, _ = label(T, 3, pair_rule="search")
    assert is_k_cordial(T, f)


def test_deterministic():
    T = path(10)
    assert label(T, 3)[0] == label(T, 3)[0]


def test_edgeless_input():
    f, _ = label(Hypergraph(5), 3)
    assert f.labels == (0, 1, 2, 0, 1)
