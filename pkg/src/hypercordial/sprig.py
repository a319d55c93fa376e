"""Sprigs: k edges each paired with a private vertex, removed as one induction step.

A sprig ``(e_1..e_k; v_1..v_k)`` has ``v_i`` in ``e_i`` and every edge at
``v_i`` among the ``e_j``. Its 0/1 matrix has entry ``(i, j) = 1`` iff
``v_j`` lies in ``e_i``; the constructions only need the shapes below.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import ContractViolation, SprigSearchExhausted
from .hypergraph import Hypergraph, components, remove

Matrix = tuple[tuple[int, ...], ...]

# order 2
SEPARATE2: Matrix = ((1, 0), (0, 1))
CHAINED2: Matrix = ((1, 0), (1, 1))
# order 3
SEPARATE3: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
TAIL3: Matrix = ((1, 0, 0), (0, 1, 0), (0, 1, 1))
FAN3: Matrix = ((1, 0, 0), (1, 1, 0), (1, 0, 1))
PATH3: Matrix = ((1, 0, 0), (1, 1, 0), (0, 1, 1))

ORDER2_SHAPES = (SEPARATE2, CHAINED2)
ORDER3_SHAPES = (SEPARATE3, TAIL3, FAN3, PATH3)

SHAPE_NAMES = {
    SEPARATE2: "separate",
    CHAINED2: "chained",
    SEPARATE3: "separate",
    TAIL3: "tail",
    FAN3: "fan",
    PATH3: "path",
}


class Relation(enum.Enum):
    CONTAINING = "containing"
    FULLY_INCIDENT = "fully-incident"
    NON_INCIDENT = "non-incident"
    OTHER = "other"


@dataclass(frozen=True)
class Sprig:
    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(self.edges) != len(self.vertices):
            raise ContractViolation("sprig needs as many vertices as edges")
        if len(set(self.edges)) != len(self.edges) or len(set(self.vertices)) != len(
            self.vertices
        ):
            raise ContractViolation("sprig edges and vertices must be distinct")

    @property
    def order(self) -> int:
        return len(self.edges)


def validate_sprig(H: Hypergraph, S: Sprig) -> None:
    edge_set = set(S.edges)
    for e, v in zip(S.edges, S.vertices):
        if v not in H.edge(e):
            raise ContractViolation(f"vertex {v} not in edge {e}; not a sprig")
        outside = [i for i in H.incidence[v] if i not in edge_set]
        if outside:
            raise ContractViolation(
                f"vertex {v} also lies in edges {outside}; not a sprig"
            )


def adjacency_matrix(H: Hypergraph, S: Sprig) -> Matrix:
    validate_sprig(H, S)
    return matrix_of(H, S.edges, S.vertices)


def matrix_of(H: Hypergraph, edges: Sequence[int], vertices: Sequence[int]) -> Matrix:
    return tuple(
        tuple(1 if v in H.edges[e - 1] else 0 for v in vertices) for e in edges
    )


def classify_relation(H: Hypergraph, S: Sprig, A: Iterable[int]) -> Relation:
    """Relation of sprig ``S`` to vertex set ``A``.

    Containing means every vertex of ``A`` is one of the sprig vertices.
    """
    A = frozenset(A)
    sv = set(S.vertices)
    if A and A <= sv:
        return Relation.CONTAINING
    edge_sets = [H.edge(e) for e in S.edges]
    if not any(e & A for e in edge_sets):
        return Relation.NON_INCIDENT
    if not (sv & A) and all(e & A for e in edge_sets):
        return Relation.FULLY_INCIDENT
    return Relation.OTHER


def remainder(T: Hypergraph, S: Sprig) -> Hypergraph:
    """``T`` without the sprig edges and without vertices left isolated."""
    return remove(T, F=S.edges, prune_isolated=True)


def is_pendant(T: Hypergraph, S: Sprig) -> bool:
    """At most one component of ``T - {v_1..v_k}`` carries an edge."""
    _, comp_edges = components(T, removed=S.vertices)
    return sum(1 for c in comp_edges if c) <= 1


def find_pendant_sprig(
    T: Hypergraph,
    A: Iterable[int],
    relation: Relation,
    allowed: Sequence[Matrix],
    restrict_to: Optional[Iterable[int]] = None,
    accept: Optional[Callable[[Sprig], bool]] = None,
) -> Sprig:
    """Search for a pendant sprig with the given relation to ``A``.

    Edge sets are built by peeling leaf-edges one at a time, so the rest of
    the hypertree stays connected; each set of ``k`` peeled edges is then
    tried against every vertex choice and ordering. ``accept`` is an extra
    filter applied to complete candidates. Edges and vertices are tried in
    ascending id order, so the result is deterministic.
    """
    allowed = tuple(allowed)
    if not allowed:
        raise ContractViolation("no allowed sprig shapes")
    k = len(allowed[0])
    A = frozenset(A)
    restrict = None if restrict_to is None else frozenset(restrict_to)
    edges = T.edges
    inc = T.incidence
    deg = T.degrees

    def eligible(i: int) -> bool:
        if restrict is not None and i not in restrict:
            return False
        e = edges[i - 1]
        if relation is Relation.NON_INCIDENT:
            return not (e & A)
        if relation is Relation.FULLY_INCIDENT:
            return bool(e & A)
        return True

    def is_leaf(i: int, dec: dict) -> bool:
        big = 0
        for v in edges[i - 1]:
            if deg[v] - dec.get(v, 0) > 1:
                big += 1
                if big > 1:
                    return False
        return True

    big = frozenset(v for v in range(1, T.n + 1) if deg[v] > 1)
    start = [
        i for i, e in enumerate(edges, start=1) if len(e & big) <= 1 and eligible(i)
    ]
    seen: set[frozenset[int]] = set()

    def arrange(chosen: frozenset[int]) -> Optional[Sprig]:
        ordered = sorted(chosen)
        inside = {}
        for i in ordered:
            for v in edges[i - 1]:
                inside[v] = inside.get(v, 0) + 1
        options = []
        for i in ordered:
            opts = [v for v in sorted(edges[i - 1]) if inside[v] == deg[v]]
            if relation is Relation.FULLY_INCIDENT:
                opts = [v for v in opts if v not in A]
            if not opts:
                return None
            options.append(opts)
        for pick in itertools.product(*options):
            if len(set(pick)) < k:
                continue
            if relation is Relation.CONTAINING and not A <= set(pick):
                continue
            for perm in itertools.permutations(range(k)):
                es = tuple(ordered[p] for p in perm)
                vs = tuple(pick[p] for p in perm)
                if matrix_of(T, es, vs) not in allowed:
                    continue
                S = Sprig(es, vs)
                if classify_relation(T, S, A) is not relation:
                    continue
                if accept is None or accept(S):
                    return S
        return None

    def search(chosen: frozenset[int], dec: dict, cand: list[int]) -> Optional[Sprig]:
        if len(chosen) == k:
            return arrange(chosen)
        for i in cand:
            nxt = chosen | {i}
            if nxt in seen:
                continue
            seen.add(nxt)
            dec2 = dict(dec)
            for v in edges[i - 1]:
                dec2[v] = dec2.get(v, 0) + 1
            grown = set(cand)
            grown.discard(i)
            for v in edges[i - 1]:
                for j in inc[v]:
                    if j not in nxt and j not in grown and eligible(j) and is_leaf(j, dec2):
                        grown.add(j)
            found = search(nxt, dec2, sorted(grown))
            if found is not None:
                return found
        return None

    found = search(frozenset(), {}, start)
    if found is None:
        raise SprigSearchExhausted(
            f"no pendant {relation.value} sprig of order {k} with the allowed shapes"
        )
    return found
