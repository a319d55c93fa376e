import pytest
from hypothesis import given

from hypercordial.errors import ContractViolation
from hypercordial.helpful import (
    HelpfulConfiguration,
    find_even_degree_vertex,
    find_helpful_configuration,
    is_helpful,
    residual_edges,
)
from hypercordial.hypergraph import Hypergraph, components, remove

from conftest import H, hypertrees, path, star


def test_even_degree_path():
    assert find_even_degree_vertex(path(2)) == 2


def test_even_degree_trivial():
    assert find_even_degree_vertex(Hypergraph(1)) == 1


def test_even_degree_spider():
    # four 2-edge legs from center 1
    T = H((1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7), (1, 8), (8, 9))
    assert find_even_degree_vertex(T) == 1


def test_even_degree_needs_even_m():
    with pytest.raises(ContractViolation):
        find_even_degree_vertex(path(3))


def test_residual_empty_on_path():
    assert residual_edges(path(3), 4, 2) == frozenset()


def test_residual_when_not_a_pair():
    # 3 is adjacent to leaf 4, so (4, 3) is not a pair
    with pytest.raises(ContractViolation):
        residual_edges(path(3), 4, 3)


def test_residual_on_larger_tree():
    # center 1 of degree 2: branch to leaf 4, branch 1-5-6-7
    T = H((1, 2), (2, 3, 4), (1, 5), (5, 6), (6, 7))
    assert residual_edges(T, 4, 1) == {4, 5}


def test_degree_three_vertex():
    assert find_helpful_configuration(star(3)) == HelpfulConfiguration.one(1)


def test_path_pair():
    A = find_helpful_configuration(path(3))
    assert A.vertices == (4, 2) and A.residual_edges == frozenset()


def test_trivial_single_vertex():
    assert find_helpful_configuration(Hypergraph(1)) == HelpfulConfiguration.one(1)


def test_helpful_needs_m_divisible_by_three():
    with pytest.raises(ContractViolation):
        find_helpful_configuration(path(2))


def test_is_helpful_rejects_wrong_residual():
    assert not is_helpful(path(3), HelpfulConfiguration.two(4, 2, frozenset({1})))
    assert not is_helpful(path(3), HelpfulConfiguration.one(2))


@given(hypertrees(max_edges=40))
def test_found_configuration_is_helpful(T):
    if T.m % 3:
        return
    A = find_helpful_configuration(T)
    assert is_helpful(T, A)


@given(hypertrees(max_edges=40))
def test_empty_residual_leaves_one_component(T):
    if T.m % 3:
        return
    A = find_helpful_configuration(T)
    if A.size == 2 and not A.residual_edges:
        R = remove(T, F=A.residual_edges)
        _, comp_edges = components(R, removed=A.vertices)
        assert sum(1 for c in comp_edges if c) <= 1


@given(hypertrees(max_edges=40))
def test_even_vertex_has_even_degree(T):
    if T.m % 2:
        return
    u = find_even_degree_vertex(T)
    assert T.degree(u) % 2 == 0
    assert all(T.degree(v) % 2 for v in range(1, u))
