"""Exhaustive k-cordiality decisions for small hypergraphs.

Vertices are labeled depth-first, highest degree first. A branch is cut as
soon as a residue is used on more than ``ceil(n/k)`` vertices (or completed
edges exceed ``ceil(m/k)``), or when the unlabeled vertices (edges) can no
longer lift every residue up to ``floor(n/k)`` (``floor(m/k)``). Both cuts
only discard branches that contain no cordial labeling, so counting with
them is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import ContractViolation
from .hypergraph import Hypergraph
from .labeling import Labeling

DEFAULT_BUDGET = 10**8


class Decision(enum.Enum):
    WITNESS_FOUND = "witness-found"
    EXHAUSTED_UNSAT = "exhausted-unsat"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class OracleResult:
    decision: Decision
    witness: Optional[Labeling]
    nodes_explored: int


class _BudgetExceeded(Exception):
    pass


def vertex_order(H: Hypergraph) -> list[int]:
    return sorted(H.vertices(), key=lambda v: (-H.degrees[v], v))


def _search(H: Hypergraph, k: int, budget: int, order: list[int], on_leaf) -> int:
    """Run the pruned search, calling ``on_leaf(labels)`` at each cordial labeling.

    ``on_leaf`` returns True to stop. Returns the number of nodes explored.
    """
    n, m = H.n, H.m
    vmax, vmin = -(-n // k), n // k
    emax, emin = -(-m // k), m // k
    labels = [0] * (n + 1)
    vcount = [0] * k
    ecount = [0] * k
    left = [len(e) for e in H.edges]  # unlabeled vertices per edge
    esum = [0] * m
    inc = [[i - 1 for i in H.incidence[v]] for v in range(n + 1)]
    nodes = 0
    stop = False

    def feasible(counts, floor_, remaining):
        need = 0
        for c in counts:
            if c < floor_:
                need += floor_ - c
        return need <= remaining

    def rec(depth: int, edges_done: int):
        nonlocal nodes, stop
        if depth == n:
            if on_leaf(labels):
                stop = True
            return
        v = order[depth]
        for a in range(k):
            if vcount[a] >= vmax:
                continue
            nodes += 1
            if nodes > budget:
                raise _BudgetExceeded
            labels[v] = a
            vcount[a] += 1
            closed = []
            ok = True
            for i in inc[v]:
                esum[i] += a
                left[i] -= 1
                if left[i] == 0:
                    lab = esum[i] % k
                    ecount[lab] += 1
                    closed.append(lab)
                    if ecount[lab] > emax:
                        ok = False
            done = edges_done + len(closed)
            if ok and feasible(vcount, vmin, n - depth - 1) and feasible(ecount, emin, m - done):
                rec(depth + 1, done)
            for lab in closed:
                ecount[lab] -= 1
            for i in inc[v]:
                esum[i] -= a
                left[i] += 1
            vcount[a] -= 1
            if stop:
                return

    rec(0, 0)
    return nodes


def exists_k_cordial(H: Hypergraph, k: int, budget: int = DEFAULT_BUDGET) -> OracleResult:
    if k < 2:
        raise ContractViolation("k must be at least 2")
    found: list[Labeling] = []

    def keep(labels):
        found.append(Labeling(k, tuple(labels[1:])))
        return True

    try:
        nodes = _search(H, k, budget, vertex_order(H), keep)
    except _BudgetExceeded:
        return OracleResult(Decision.INDETERMINATE, None, budget)
    if found:
        return OracleResult(Decision.WITNESS_FOUND, found[0], nodes)
    return OracleResult(Decision.EXHAUSTED_UNSAT, None, nodes)


def count_k_cordial(H: Hypergraph, k: int, max_vertices: int = 12) -> int:
    if k < 2:
        raise ContractViolation("k must be at least 2")
    if H.n > max_vertices:
        raise ContractViolation(f"counting is limited to {max_vertices} vertices, got {H.n}")
    total = 0

    def tally(labels):
        nonlocal total
        total += 1
        return False

    _search(H, k, 10**12, vertex_order(H), tally)
    return total
