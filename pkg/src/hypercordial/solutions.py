"""Labeling the vertices of a removed sprig so the whole labeling stays cordial.

For order 3 everything reduces to the linear system ``z = y + M x`` over
Z_3: ``y`` holds the label sums of the non-sprig part of each sprig edge,
``x`` the sprig vertex labels and ``z`` the resulting edge labels. A
*simple* solution is an ``x`` with all-distinct coordinates giving a ``z``
with all-distinct coordinates. A *composed* solution is a triple of
two-valued ``x`` vectors, each giving an all-distinct ``z``, which covers
the residues in the ways :func:`composed_conditions` describes; it is used
together with a shift of the labels on the helpful configuration.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import ContractViolation, InvariantViolation
from .helpful import HelpfulConfiguration
from .hypergraph import Hypergraph
from .labeling import Labeling, is_k_cordial, is_strong_on
from .sprig import (
    CHAINED2,
    FAN3,
    ORDER3_SHAPES,
    PATH3,
    SEPARATE2,
    SEPARATE3,
    TAIL3,
    Matrix,
    Relation,
    Sprig,
    matrix_of,
    classify_relation,
    validate_sprig,
)

Vector = tuple[int, int, int]

ALL_VECTORS: tuple[Vector, ...] = tuple(itertools.product(range(3), repeat=3))


class VectorClass(enum.Enum):
    ALL_DISTINCT = "P"
    TWO_VALUES = "D"
    CONSTANT = "neither"


def classify_vector(x: Sequence[int]) -> VectorClass:
    distinct = len(set(x))
    if distinct == 3:
        return VectorClass.ALL_DISTINCT
    if distinct == 2:
        return VectorClass.TWO_VALUES
    return VectorClass.CONSTANT


DISTINCT_VECTORS = tuple(v for v in ALL_VECTORS if len(set(v)) == 3)
TWO_VALUE_VECTORS = tuple(v for v in ALL_VECTORS if len(set(v)) == 2)


def apply(M: Matrix, y: Sequence[int], x: Sequence[int]) -> Vector:
    """``y + M x`` over Z_3."""
    return tuple((y[i] + sum(M[i][j] * x[j] for j in range(3))) % 3 for i in range(3))


def is_simple_solution(M: Matrix, y: Sequence[int], x: Sequence[int]) -> bool:
    return len(set(x)) == 3 and len(set(apply(M, y, x))) == 3


def composed_conditions(M: Matrix, y: Sequence[int], X: Sequence[Sequence[int]]) -> set[int]:
    """Which of the four composed-solution conditions ``X`` satisfies.

    1. three distinct vectors; 2. each is two-valued and gives an
    all-distinct ``y + M x``; 3. every residue appears twice in some
    member; 4. every residue is missing from some member.
    """
    X = [tuple(x) for x in X]
    ok = set()
    if len(set(X)) == 3 and len(X) == 3:
        ok.add(1)
    if all(len(set(x)) == 2 and len(set(apply(M, y, x))) == 3 for x in X):
        ok.add(2)
    if all(any(x.count(a) == 2 for x in X) for a in range(3)):
        ok.add(3)
    if all(any(a not in x for x in X) for a in range(3)):
        ok.add(4)
    return ok


@lru_cache(maxsize=None)
def _simple(M: Matrix, y: Vector) -> Optional[Vector]:
    for x in DISTINCT_VECTORS:
        if len(set(apply(M, y, x))) == 3:
            return x
    return None


def find_simple_solution(M: Matrix, y: Sequence[int]) -> Optional[Vector]:
    """Lexicographically smallest simple solution, or ``None``."""
    return _simple(M, tuple(v % 3 for v in y))


ComposedKind = Union[int, str]  # 1, 2 or "full"

_REQUIRED = {1: {1, 2, 3}, 2: {1, 2, 4}, "full": {1, 2, 3, 4}}


@dataclass(frozen=True)
class Solution:
    """``kind`` is ``"simple"`` (one vector) or ``"1-composed"``, ``"2-composed"``, ``"composed"``."""

    kind: str
    vectors: tuple[Vector, ...]


@lru_cache(maxsize=None)
def _composed(M: Matrix, y: Vector, kind: ComposedKind) -> Optional[tuple[Vector, ...]]:
    need = _REQUIRED[kind]
    usable = [x for x in TWO_VALUE_VECTORS if len(set(apply(M, y, x))) == 3]
    for X in itertools.combinations(usable, 3):
        if need <= composed_conditions(M, y, X):
            return X
    return None


def find_composed_solution(M: Matrix, y: Sequence[int], kind: ComposedKind) -> Optional[Solution]:
    """First 3-subset of two-valued vectors (lexicographic) meeting the conditions of ``kind``."""
    if kind not in _REQUIRED:
        raise ValueError(f"kind must be 1, 2 or 'full', got {kind!r}")
    X = _composed(M, tuple(v % 3 for v in y), kind)
    if X is None:
        return None
    name = {1: "1-composed", 2: "2-composed", "full": "composed"}[kind]
    return Solution(name, X)


@dataclass(frozen=True)
class SprigContext:
    residuals: tuple[frozenset[int], ...]
    y: tuple[int, ...]


def sprig_context(
    H: Hypergraph, labels: Sequence[Optional[int]], S: Sprig, k: int
) -> SprigContext:
    """Label sums of ``e_j`` minus the sprig vertices, for each sprig edge."""
    sv = set(S.vertices)
    res = []
    ys = []
    for e in S.edges:
        r = H.edges[e - 1] - sv
        total = 0
        for v in r:
            a = labels[v - 1]
            if a is None:
                raise ContractViolation(f"vertex {v} of sprig edge {e} is unlabeled")
            total += a
        res.append(frozenset(r))
        ys.append(total % k)
    return SprigContext(tuple(res), tuple(ys))


@dataclass(frozen=True)
class Extension:
    """How a sprig was labeled: ``shift`` is added on ``shifted`` before assigning ``x``."""

    labeling: Labeling
    y: tuple[int, ...]
    x: tuple[int, ...]
    solution: str
    shift: int
    shifted: tuple[int, ...]


def _finish(H, labels, S, k, x, shift, shifted, y, solution, A, check=True) -> Extension:
    out = list(labels)
    for v in shifted:
        out[v - 1] = (out[v - 1] + shift) % k
    for v, a in zip(S.vertices, x):
        out[v - 1] = a
    g = Labeling(k, tuple(out))
    if check:
        if not is_k_cordial(H, g):
            raise InvariantViolation(f"sprig extension ({solution}) produced a non-cordial labeling")
        if not is_strong_on(H, g, A):
            raise InvariantViolation(f"sprig extension ({solution}) is not strong on {sorted(A)}")
    return Extension(g, tuple(y), tuple(x), solution, shift, tuple(shifted) if shift else ())


def plan_sprig_k2(
    H: Hypergraph, labels: Sequence[Optional[int]], S: Sprig, u: int, check: bool = True
) -> Extension:
    validate_sprig(H, S)
    if S.order != 2:
        raise ContractViolation("order-2 sprig expected")
    if H.degree(u) % 2:
        raise ContractViolation(f"vertex {u} has odd degree")
    M = matrix_of(H, S.edges, S.vertices)
    rel = classify_relation(H, S, {u})
    y = sprig_context(H, labels, S, 2).y
    if M == SEPARATE2 and rel in (Relation.NON_INCIDENT, Relation.FULLY_INCIDENT):
        if y[0] == y[1]:
            return _finish(H, labels, S, 2, (0, 1), 0, (), y, "distinct-sums", {u}, check)
        a = labels[u - 1]
        return _finish(H, labels, S, 2, (a, a), 1, (u,), y, "flip-center", {u}, check)
    if M == CHAINED2 and rel is Relation.NON_INCIDENT:
        x = (0, 1) if y[0] == y[1] else (1, 0)
        return _finish(H, labels, S, 2, x, 0, (), y, "chained-table", {u}, check)
    raise ContractViolation(f"order-2 sprig of shape {M} is {rel.value} with {{{u}}}")


def extend_sprig_k2(H: Hypergraph, labels: Sequence[Optional[int]], S: Sprig, u: int) -> Labeling:
    """2-cordial labeling of ``H`` strong on ``{u}`` from one of ``H - S``.

    ``labels`` is indexed by ``v - 1`` over all of ``H``; entries at the
    sprig vertices are ignored.
    """
    return plan_sprig_k2(H, labels, S, u).labeling


_K3_CASES = {
    SEPARATE3: {Relation.NON_INCIDENT, Relation.FULLY_INCIDENT},
    TAIL3: {Relation.NON_INCIDENT, Relation.CONTAINING},
    FAN3: {Relation.NON_INCIDENT},
    PATH3: {Relation.NON_INCIDENT},
}


def plan_sprig_k3(
    H: Hypergraph,
    labels: Sequence[Optional[int]],
    S: Sprig,
    A: HelpfulConfiguration,
    check: bool = True,
) -> Extension:
    validate_sprig(H, S)
    if S.order != 3:
        raise ContractViolation("order-3 sprig expected")
    M = matrix_of(H, S.edges, S.vertices)
    if M not in ORDER3_SHAPES:
        raise ContractViolation(f"sprig shape {M} is not one of the four handled shapes")
    Aset = A.as_set
    rel = classify_relation(H, S, Aset)
    if rel not in _K3_CASES[M]:
        raise ContractViolation(f"sprig shape {M} cannot be {rel.value} with A")
    y = sprig_context(H, labels, S, 3).y
    x = find_simple_solution(M, y)
    if x is not None:
        return _finish(H, labels, S, 3, x, 0, (), y, "simple", Aset, check)
    if rel is Relation.CONTAINING:
        raise InvariantViolation(f"no simple solution for y={y} with a containing sprig")
    sol = find_composed_solution(M, y, "full") or find_composed_solution(M, y, A.size)
    if sol is None:
        raise InvariantViolation(f"no composed solution for shape {M}, y={y}")
    if A.size == 1:
        (u,) = A.vertices
        a = labels[u - 1]
        x = next(v for v in sol.vectors if v.count(a) == 2)
        b = ({0, 1, 2} - set(x)).pop()
        shift = (b - a) % 3
    else:
        (a,) = {0, 1, 2} - {labels[v - 1] for v in A.vertices}
        x = next(v for v in sol.vectors if a not in v)
        b = next(r for r in x if x.count(r) == 2)
        (c,) = {0, 1, 2} - {a, b}
        shift = (a - c) % 3
    return _finish(H, labels, S, 3, x, shift, A.vertices, y, sol.kind, Aset, check)


def extend_sprig_k3(
    H: Hypergraph, labels: Sequence[Optional[int]], S: Sprig, A: HelpfulConfiguration
) -> Labeling:
    """3-cordial labeling of ``H`` strong on ``A`` from one of ``H - S``."""
    return plan_sprig_k3(H, labels, S, A).labeling
