import pytest
from hypothesis import given

from hypercordial.errors import ContractViolation, NotAHypertreeError, ValidationError
from hypercordial.hypergraph import (
    Hypergraph,
    analyze,
    components,
    degree,
    edge_count_identity,
    incidence_graph,
    is_hypertree,
    is_linear,
    leaf_edges,
    leaves,
    remove,
    require_hypertree,
)

from conftest import H, hypertrees, path, star


def test_path_is_hypertree():
    rep = analyze(path(2))
    assert rep.is_hypertree and rep.is_connected and not rep.has_cycle


def test_parallel_edges_form_cycle():
    # two edges sharing two vertices
    rep = analyze(Hypergraph(2, ((1, 2), (1, 2))))
    assert rep.has_cycle and not rep.is_hypertree


def test_disconnected(two_disjoint_edges):
    rep = analyze(two_disjoint_edges)
    assert not rep.is_connected and not rep.is_hypertree


def test_isolated_vertex_breaks_connectivity():
    rep = analyze(H((1, 2), n=3))
    assert rep.isolated_vertices == {3}
    assert not rep.is_connected


def test_trivial_hypergraphs():
    assert is_hypertree(Hypergraph(0))
    assert is_hypertree(Hypergraph(1))
    assert not is_hypertree(Hypergraph(2))


def test_triangle_of_edges_is_cycle():
    assert analyze(H((1, 2), (2, 3), (3, 1))).has_cycle


@pytest.mark.parametrize(
    "n, edges, bad",
    [
        (3, ((1,),), 1),
        (3, ((1, 2), (2, 4)), 2),
        (3, ((1, 2), (3, 3)), 2),
        (3, ((1, 2), (0, 1)), 2),
    ],
)
def test_validation_reports_edge(n, edges, bad):
    with pytest.raises(ValidationError) as err:
        Hypergraph(n, edges)
    assert err.value.edge_index == bad


def test_require_hypertree_raises(two_disjoint_edges):
    with pytest.raises(NotAHypertreeError):
        require_hypertree(two_disjoint_edges)


def test_degree():
    P = path(2)
    assert degree(P, 2) == 2
    assert degree(P, 1) == 1
    assert degree(Hypergraph(1), 1) == 0
    with pytest.raises(ContractViolation):
        degree(P, 4)


def test_incidence_graph_adjacency():
    G = incidence_graph(H((1, 2, 3), (3, 4)))
    assert G.vertex_side[3] == (1, 2)
    assert set(G.edge_side[1]) == {1, 2, 3}


def test_leaf_edges():
    assert leaf_edges(path(2)) == {1, 2}
    assert leaf_edges(star(3)) == {1, 2, 3}
    assert leaf_edges(path(3)) == {1, 3}


def test_leaves_of_path():
    assert leaves(path(3)) == {1, 4}


def test_remove_vertex_drags_edges():
    R = remove(path(2), W={2})
    assert R.n == 2 and R.m == 0
    assert R.vertex_origin == (1, 3)


def test_remove_edge_and_prune():
    R = remove(path(2), F={2}, prune_isolated=True)
    assert R == H((1, 2))
    assert R.vertex_origin == (1, 2) and R.edge_origin == (1,)


def test_remove_nothing_is_identity():
    T = star(3, size=3)
    assert remove(T) == T


def test_remove_composes_origins():
    T = path(4)
    R1 = remove(T, F={1}, prune_isolated=True)
    R2 = remove(R1, F={1}, prune_isolated=True)
    assert R2.vertex_origin == (3, 4, 5)
    assert R2.edge_origin == (3, 4)


def test_components_after_removal():
    comp, edges = components(path(4), removed={3})
    assert comp[1] == comp[2] != comp[4]
    assert sorted(map(sorted, (e for e in edges if e))) == [[1], [4]]


@pytest.mark.parametrize("T", [path(2), H((1, 2, 3)), star(3)])
def test_edge_count_identity(T):
    assert edge_count_identity(T)


def test_edge_count_identity_needs_nontrivial():
    with pytest.raises(ContractViolation):
        edge_count_identity(Hypergraph(1))


def test_linearity():
    assert is_linear(star(4, size=3))
    assert not is_linear(Hypergraph(3, ((1, 2, 3), (1, 2))))


@given(hypertrees())
def test_generated_are_linear_hypertrees(T):
    assert is_hypertree(T) and is_linear(T) and edge_count_identity(T)


@given(hypertrees(max_edges=20))
def test_peeling_a_leaf_edge_keeps_hypertree(T):
    if T.m < 2:
        return
    for e in sorted(leaf_edges(T)):
        R = remove(T, F={e}, prune_isolated=True)
        assert is_hypertree(R) and R.m == T.m - 1


@given(hypertrees(max_edges=10))
def test_analyze_is_pure(T):
    assert analyze(T) == analyze(T)
