"""The vertex structures the inductions pivot on.

For k = 2 this is any vertex of even degree. For k = 3 it is either one
vertex of degree divisible by 3, or a pair ``(u1, u2)`` where ``u1`` is a
leaf not adjacent to ``u2``, ``d(u2) = 2 (mod 3)``, and the edges hanging
off ``u2`` away from ``u1`` number a multiple of 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, InvariantViolation
from .hypergraph import Hypergraph, components, leaves


@dataclass(frozen=True)
class HelpfulConfiguration:
    """``vertices`` is ``(u,)`` or ``(u1, u2)``; ``residual_edges`` is empty for ``(u,)``."""

    vertices: tuple[int, ...]
    residual_edges: frozenset[int] = frozenset()

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @classmethod
    def one(cls, u: int) -> HelpfulConfiguration:
        return cls((u,))

    @classmethod
    def two(cls, u1: int, u2: int, residual: frozenset[int]) -> HelpfulConfiguration:
        return cls((u1, u2), frozenset(residual))


def find_even_degree_vertex(T: Hypergraph) -> int:
    if T.m % 2:
        raise ContractViolation("needs an even number of edges")
    for v in T.vertices():
        if T.degrees[v] % 2 == 0:
            return v
    raise InvariantViolation("hypertree with an even edge count has no even-degree vertex")


def adjacent(T: Hypergraph, u: int, v: int) -> bool:
    return any(v in T.edges[i - 1] for i in T.incidence[u])


def residual_edges(T: Hypergraph, u1: int, u2: int) -> frozenset[int]:
    """Edges of the components of ``T - u2`` that do not contain ``u1``."""
    if not is_helpful_pair(T, u1, u2):
        raise ContractViolation(f"({u1}, {u2}) is not a leaf / degree-2-mod-3 pair")
    comp, comp_edges = components(T, removed=(u2,))
    own = comp[u1]
    return frozenset(i for c, es in enumerate(comp_edges) if c != own for i in es)


def is_helpful_pair(T: Hypergraph, u1: int, u2: int) -> bool:
    return (
        u1 != u2
        and T.degrees[u2] % 3 == 2
        and u1 in leaves(T)
        and not adjacent(T, u1, u2)
    )


def is_helpful(T: Hypergraph, A: HelpfulConfiguration) -> bool:
    """Re-check ``A`` against ``T`` from scratch."""
    if A.size == 1:
        (u,) = A.vertices
        return 1 <= u <= T.n and T.degrees[u] % 3 == 0
    u1, u2 = A.vertices
    if not (1 <= u1 <= T.n and 1 <= u2 <= T.n) or not is_helpful_pair(T, u1, u2):
        return False
    P = residual_edges(T, u1, u2)
    return len(P) % 3 == 0 and P == A.residual_edges


def find_helpful_configuration(T: Hypergraph) -> HelpfulConfiguration:
    """First configuration in id order, single vertices before pairs.

    Pairs are scanned by ``u2`` then ``u1``. For a fixed ``u2`` the
    components of ``T - u2`` are computed once; a leaf ``u1`` then sees
    ``|P| = (m - d(u2)) - (edges in u1's component)``.
    """
    if T.m % 3:
        raise ContractViolation("needs an edge count divisible by 3")
    deg = T.degrees
    for u in T.vertices():
        if deg[u] % 3 == 0:
            return HelpfulConfiguration.one(u)
    leaf_list = sorted(leaves(T))
    for u2 in T.vertices():
        if deg[u2] % 3 != 2:
            continue
        comp, comp_edges = components(T, removed=(u2,))
        outside = T.m - deg[u2]
        for u1 in leaf_list:
            if u1 == u2 or adjacent(T, u1, u2):
                continue
            own = comp_edges[comp[u1]]
            if (outside - len(own)) % 3 == 0:
                keep = set(own)
                P = frozenset(
                    i for es in comp_edges for i in es if i not in keep
                )
                return HelpfulConfiguration.two(u1, u2, P)
    raise InvariantViolation("hypertree with edge count divisible by 3 has no helpful configuration")
