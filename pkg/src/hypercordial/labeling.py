"""Vertex labelings over Z_k, induced edge labels and cordiality checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ContractViolation
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class Labeling:
    """``labels[v-1]`` is the residue of vertex ``v``."""

    modulus: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        labels = tuple(self.labels)
        for v, a in enumerate(labels, start=1):
            if not 0 <= a < self.modulus:
                raise ValueError(f"label {a} of vertex {v} outside 0..{self.modulus - 1}")
        object.__setattr__(self, "labels", labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v - 1]

    def __len__(self):
        return len(self.labels)


@dataclass(frozen=True)
class LabelHistogram:
    vertex_counts: tuple[int, ...]
    edge_counts: tuple[int, ...]

    @property
    def vertex_spread(self) -> int:
        return max(self.vertex_counts) - min(self.vertex_counts)

    @property
    def edge_spread(self) -> int:
        return max(self.edge_counts) - min(self.edge_counts)


def _check_host(H: Hypergraph, f: Labeling) -> None:
    if len(f.labels) != H.n:
        raise ContractViolation(f"labeling has {len(f.labels)} labels for {H.n} vertices")


def induced_edge_label(H: Hypergraph, f: Labeling, e: int) -> int:
    _check_host(H, f)
    return sum(f.labels[v - 1] for v in H.edge(e)) % f.modulus


def edge_labels(H: Hypergraph, f: Labeling) -> tuple[int, ...]:
    _check_host(H, f)
    lab = f.labels
    k = f.modulus
    return tuple(sum(lab[v - 1] for v in e) % k for e in H.edges)


def histogram(H: Hypergraph, f: Labeling) -> LabelHistogram:
    k = f.modulus
    vc = [0] * k
    for a in f.labels:
        vc[a] += 1
    ec = [0] * k
    for a in edge_labels(H, f):
        ec[a] += 1
    return LabelHistogram(tuple(vc), tuple(ec))


def _balanced(counts: Sequence[int]) -> bool:
    return max(counts) - min(counts) <= 1


def is_k_cordial(H: Hypergraph, f: Labeling) -> bool:
    h = histogram(H, f)
    return _balanced(h.vertex_counts) and _balanced(h.edge_counts)


def check_independent(H: Hypergraph, A: Iterable[int]) -> frozenset[int]:
    """Return ``A`` as a set after checking no edge holds two of its vertices."""
    A = frozenset(A)
    for i, e in enumerate(H.edges, start=1):
        if len(e & A) > 1:
            raise ContractViolation(f"vertices {sorted(e & A)} of A are adjacent via edge {i}")
    return A


def is_strong_on(H: Hypergraph, f: Labeling, A: Iterable[int]) -> bool:
    """Cordial, distinct labels on ``A`` and equal label counts on edges meeting ``A``."""
    A = check_independent(H, A)
    if not is_k_cordial(H, f):
        return False
    if len({f[v] for v in A}) != len(A):
        return False
    counts = [0] * f.modulus
    for e, a in zip(H.edges, edge_labels(H, f)):
        if e & A:
            counts[a] += 1
    return len(set(counts)) == 1


def add_on_set(f: Labeling, A: Iterable[int], x: int) -> Labeling:
    A = set(A)
    k = f.modulus
    return Labeling(k, tuple((a + x) % k if v in A else a for v, a in enumerate(f.labels, start=1)))


def least_used(counts: Sequence[int], forbidden: Iterable[int] = ()) -> int:
    """Smallest residue among those with the minimum count, skipping ``forbidden``."""
    forbidden = set(forbidden)
    best = None
    for a, c in enumerate(counts):
        if a in forbidden:
            continue
        if best is None or c < counts[best]:
            best = a
    if best is None:
        raise ContractViolation("every residue is forbidden")
    return best


def fill_isolated(
    labels: list[Optional[int]],
    k: int,
    new_vertices: Sequence[int],
    A: Iterable[int] = (),
) -> list[tuple[int, int]]:
    """Label ``new_vertices`` (1-based) in place with the least-used residue rule.

    ``labels`` is indexed by ``v - 1``; entries for ``new_vertices`` are
    overwritten. Members of ``A`` among the new vertices also avoid residues
    already used on ``A``. Returns the ``(vertex, residue)`` assignments in
    the order they were made.
    """
    counts = [0] * k
    new_set = set(new_vertices)
    for v, a in enumerate(labels, start=1):
        if a is not None and v not in new_set:
            counts[a] += 1
    A = set(A)
    used_on_A = {labels[v - 1] for v in A if v not in new_set and labels[v - 1] is not None}
    out = []
    for v in new_vertices:
        if v in A:
            a = least_used(counts, used_on_A)
            used_on_A.add(a)
        else:
            a = least_used(counts)
        labels[v - 1] = a
        counts[a] += 1
        out.append((v, a))
    return out


def extend_to_isolated(
    H_small: Hypergraph,
    f: Labeling,
    isolated: Sequence[int],
    A: Iterable[int] = (),
) -> Labeling:
    """Extend a cordial labeling of ``H_small`` to ``H_small`` plus new isolated vertices.

    The new vertices get ids ``isolated`` (which must be exactly
    ``n+1 .. n+len(isolated)`` in some order) and receive labels greedily.
    """
    A = frozenset(A)
    _check_host(H_small, f)
    if not is_k_cordial(H_small, f):
        raise ContractViolation("labeling to extend is not cordial")
    if A and not is_strong_on(H_small, f, A & set(H_small.vertices())):
        raise ContractViolation("labeling to extend is not strong on A")
    expected = set(range(H_small.n + 1, H_small.n + len(isolated) + 1))
    if set(isolated) != expected or len(isolated) != len(expected):
        raise ContractViolation(
            f"new isolated vertices must be {H_small.n + 1}..{H_small.n + len(isolated)}"
        )
    labels: list[Optional[int]] = list(f.labels) + [None] * len(isolated)
    fill_isolated(labels, f.modulus, isolated, A)
    return Labeling(f.modulus, tuple(labels))
