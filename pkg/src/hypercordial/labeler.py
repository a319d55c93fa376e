"""Constructive 2- and 3-cordial labelings of hypertrees.

The edge count decides the route. With ``m = 0 (mod k)`` the hypertree is
cut down sprig by sprig while a pivot set ``A`` (an even-degree vertex for
k = 2, a helpful configuration for k = 3) is kept intact, and the labeling
is rebuilt on the way back up, strong on ``A`` at every level. With
``m = 1`` one leaf-edge is dropped first and its label is left to chance.
For k = 3 and ``m = 2`` two leaf-edges are dropped and their leaves are
labeled from the table in :func:`pair_labels`.

Everything runs in the vertex ids of the input hypertree: each level's
sub-hypertree carries ``vertex_origin``, so one label array is shared by
all levels.
"""

from __future__ import annotations

import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .errors import ContractViolation, InvariantViolation
from .helpful import (
    HelpfulConfiguration,
    find_even_degree_vertex,
    find_helpful_configuration,
    is_helpful,
    is_helpful_pair,
    residual_edges,
)
from .hypergraph import Hypergraph, components, leaf_edges, remove, require_hypertree
from .labeling import Labeling, fill_isolated, is_k_cordial, is_strong_on
from .solutions import plan_sprig_k2, plan_sprig_k3
from .sprig import (
    ORDER2_SHAPES,
    ORDER3_SHAPES,
    SEPARATE2,
    SEPARATE3,
    SHAPE_NAMES,
    TAIL3,
    Relation,
    Sprig,
    find_pendant_sprig,
    matrix_of,
    remainder,
)

log = logging.getLogger(__name__)


@dataclass
class Step:
    """One sprig removal, in root ids. The second group is filled on the way back up."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    shape: str
    relation: str
    config: tuple[int, ...]
    edges_before: int
    isolated: tuple[tuple[int, int], ...] = ()
    y: tuple[int, ...] = ()
    x: tuple[int, ...] = ()
    solution: str = ""
    shift: int = 0
    shifted: tuple[int, ...] = ()


@dataclass
class LabelerTrace:
    k: int
    edge_count: int
    case: int
    config: tuple[int, ...] = ()
    dropped_edges: tuple[int, ...] = ()
    dropped_leaves: tuple[int, ...] = ()
    pivot: Optional[int] = None
    steps: list[Step] = field(default_factory=list)
    base: tuple[tuple[int, int], ...] = ()
    closing: tuple[tuple[int, int], ...] = ()

    def replay(self, n: int) -> tuple[int, ...]:
        """Rebuild the final labels from the recorded assignments alone."""
        labels: list[Optional[int]] = [None] * n
        for v, a in self.base:
            labels[v - 1] = a
        for st in reversed(self.steps):
            for v, a in st.isolated:
                labels[v - 1] = a
            for v in st.shifted:
                labels[v - 1] = (labels[v - 1] + st.shift) % self.k
            for v, a in zip(st.vertices, st.x):
                labels[v - 1] = a
        for v, a in self.closing:
            labels[v - 1] = a
        return tuple(labels)

    def describe(self) -> list[str]:
        out = [
            f"k={self.k} m={self.edge_count} case m%k={self.case}"
            + (f" dropped edges {list(self.dropped_edges)}" if self.dropped_edges else "")
            + (f" pivot a={self.pivot}" if self.pivot is not None else ""),
            f"configuration {list(self.config)}",
        ]
        for i, st in enumerate(self.steps):
            out.append(
                f"step {i}: m={st.edges_before} A={list(st.config)} sprig edges {list(st.edges)}"
                f" vertices {list(st.vertices)} shape={st.shape} {st.relation}"
                f" y={list(st.y)} x={list(st.x)} {st.solution}"
                + (f" shift {st.shift} on {list(st.shifted)}" if st.shift else "")
            )
        return out


Pivot = Union[int, HelpfulConfiguration]


def _as_config(A: Pivot) -> HelpfulConfiguration:
    return HelpfulConfiguration.one(A) if isinstance(A, int) else A


def _pivot_for(T: Hypergraph, k: int) -> Optional[HelpfulConfiguration]:
    if T.n == 0:
        return None
    if k == 2:
        return HelpfulConfiguration.one(find_even_degree_vertex(T))
    return find_helpful_configuration(T)


def _pivot_ok(T: Hypergraph, k: int, A: HelpfulConfiguration) -> bool:
    if k == 2:
        (u,) = A.vertices
        return T.degrees[u] % 2 == 0
    return is_helpful(T, A)


def _moved_pivot_ok(T: Hypergraph, k: int, A: HelpfulConfiguration) -> bool:
    # like _pivot_ok, but trusts residual_edges freshly computed by _relocate
    if A.size == 1:
        return T.degrees[A.vertices[0]] % k == 0
    u1, u2 = A.vertices
    return is_helpful_pair(T, u1, u2) and len(A.residual_edges) % 3 == 0


def _relocate(A: HelpfulConfiguration, src: Hypergraph, dst: Hypergraph) -> Optional[HelpfulConfiguration]:
    """Express ``A`` (ids of ``src``) in ids of ``dst``; ``None`` if a vertex was dropped.

    ``dst`` must have been cut out of ``src``, so ids keep their relative order.
    """
    targets = [src.vertex_origin[v - 1] for v in A.vertices]
    vs = []
    for r in targets:
        i = bisect_left(dst.vertex_origin, r)
        if i == dst.n or dst.vertex_origin[i] != r:
            return None
        vs.append(i + 1)
    if len(vs) == 2:
        return HelpfulConfiguration.two(vs[0], vs[1], residual_edges(dst, vs[0], vs[1]))
    return HelpfulConfiguration(vs)


def _next_sprig(
    T: Hypergraph, k: int, A: HelpfulConfiguration
) -> tuple[Sprig, Relation, Hypergraph, Optional[HelpfulConfiguration]]:
    """Pick the sprig for one induction step on ``T`` (``m > 0``, ``m = 0 mod k``).

    Returns the sprig, its relation to ``A``, what is left of ``T`` and the
    pivot to use there (relocated ``A``, or a fresh one after a containing
    sprig; ``None`` when nothing is left).
    """
    Aset = A.as_set
    checked = {}

    def keeps_pivot(S: Sprig) -> bool:
        rest = remainder(T, S)
        if rest.m == 0:
            checked[S] = (rest, None)
            return True
        moved = _relocate(A, T, rest)
        if moved is None or not _moved_pivot_ok(rest, k, moved):
            log.info("pivot %s stops being usable after removing %s; trying another sprig", A.vertices, S)
            return False
        checked[S] = (rest, moved)
        return True

    if A.size == 1:
        (u,) = A.vertices
        if T.m > T.degrees[u]:
            shapes = ORDER2_SHAPES if k == 2 else ORDER3_SHAPES
            rel = Relation.NON_INCIDENT
            S = find_pendant_sprig(T, Aset, rel, shapes, accept=keeps_pivot)
        else:
            # every edge hangs off u
            shapes = (SEPARATE2,) if k == 2 else (SEPARATE3,)
            rel = Relation.FULLY_INCIDENT
            S = find_pendant_sprig(T, Aset, rel, shapes, restrict_to=T.incidence[u], accept=keeps_pivot)
        return (S, rel) + checked[S]

    u1, u2 = A.vertices
    P = A.residual_edges
    if P:
        rel = Relation.NON_INCIDENT
        S = find_pendant_sprig(T, Aset, rel, ORDER3_SHAPES, restrict_to=P, accept=keeps_pivot)
    elif T.degrees[u2] > 2:
        rel = Relation.FULLY_INCIDENT
        comp, _ = components(T, removed=(u2,))
        at_u2 = [
            i for i in T.incidence[u2]
            if not any(comp[w] == comp[u1] for w in T.edges[i - 1] if w != u2)
        ]
        S = find_pendant_sprig(T, Aset, rel, (SEPARATE3,), restrict_to=at_u2, accept=keeps_pivot)
    else:
        rel = Relation.CONTAINING
        allowed_edges = set(T.incidence[u2]) | set(T.incidence[u1])
        S = find_pendant_sprig(T, Aset, rel, (TAIL3,), restrict_to=allowed_edges)
        rest = remainder(T, S)
        return S, rel, rest, (_pivot_for(rest, k) if rest.m else None)
    return (S, rel) + checked[S]


def _strong(
    G: Hypergraph,
    k: int,
    A: Optional[HelpfulConfiguration],
    labels: list,
    trace: LabelerTrace,
    check_steps: bool = False,
) -> None:
    """Label ``G`` (``m = 0 mod k``) into the root array ``labels``, strong on ``A``.

    With ``check_steps`` every level's labeling is verified as it is built;
    otherwise only the caller's final check runs.
    """
    levels = []
    steps = []
    cur, cfg = G, A
    if cur.m and (cfg is None or not _pivot_ok(cur, k, cfg)):
        raise InvariantViolation(f"pivot {cfg} is not usable at m={cur.m}", trace)
    while cur.m > 0:
        S, rel, rest, nxt_cfg = _next_sprig(cur, k, cfg)
        origin = cur.vertex_origin
        steps.append(
            Step(
                edges=tuple(cur.edge_origin[e - 1] for e in S.edges),
                vertices=tuple(origin[v - 1] for v in S.vertices),
                shape=SHAPE_NAMES[matrix_of(cur, S.edges, S.vertices)],
                relation=rel.value,
                config=tuple(origin[v - 1] for v in cfg.vertices),
                edges_before=cur.m,
            )
        )
        trace.steps.append(steps[-1])
        levels.append((cur, S, cfg))
        cur, cfg = rest, nxt_cfg

    # base: no edges left; only the pivot needs distinct labels
    origin = cur.vertex_origin
    pivot_ids = () if cfg is None else cfg.vertices
    lev: list[Optional[int]] = [labels[r - 1] for r in origin]
    done = fill_isolated(lev, k, list(cur.vertices()), pivot_ids)
    for v, a in done:
        labels[origin[v - 1] - 1] = a
    trace.base = trace.base + tuple((origin[v - 1], a) for v, a in done)

    for (H, S, cfg), st in zip(reversed(levels), reversed(steps)):
        origin = H.vertex_origin
        lev = [labels[r - 1] for r in origin]
        sprig_vs = set(S.vertices)
        isolated = [v for v in H.vertices() if lev[v - 1] is None and v not in sprig_vs]
        filled = fill_isolated(lev, k, isolated, cfg.vertices)
        st.isolated = tuple((origin[v - 1], a) for v, a in filled)
        if k == 2:
            ext = plan_sprig_k2(H, lev, S, cfg.vertices[0], check=check_steps)
        else:
            ext = plan_sprig_k3(H, lev, S, cfg, check=check_steps)
        # everything else at this level already holds its final label
        out = ext.labeling.labels
        for v in (*(v for v, _ in filled), *S.vertices, *ext.shifted):
            labels[origin[v - 1] - 1] = out[v - 1]
        st.y, st.x, st.solution = ext.y, ext.x, ext.solution
        st.shift = ext.shift
        st.shifted = tuple(origin[v - 1] for v in ext.shifted)


def label_strong(T: Hypergraph, k: int, A: Pivot) -> Labeling:
    """k-cordial labeling of ``T`` (``m = 0 mod k``) strong on the pivot ``A``."""
    if k not in (2, 3):
        raise ContractViolation("the construction covers k = 2 and k = 3")
    if T.m % k:
        raise ContractViolation(f"edge count {T.m} is not divisible by {k}")
    if T.m:
        require_hypertree(T)
    cfg = _as_config(A)
    if T.m and not _pivot_ok(T, k, cfg):
        raise ContractViolation(f"{cfg.vertices} is not a valid pivot")
    trace = LabelerTrace(k=k, edge_count=T.m, case=0, config=cfg.vertices)
    labels: list[Optional[int]] = [None] * T.n
    _strong(T, k, cfg, labels, trace, check_steps=True)
    f = Labeling(k, tuple(labels))
    if not is_strong_on(T, f, cfg.vertices):
        raise InvariantViolation("constructed labeling is not strong on the pivot", trace)
    return f


def pair_labels(y1: int, y2: int, a: int) -> tuple[int, int]:
    """Leaf labels for the two dropped leaf-edges when k = 3 and ``m = 2 (mod 3)``.

    ``a`` is the residue with ``n_a <= n_{a+1} <= n_{a+2}``; the two leaves
    get ``a`` and ``a + 1`` in the order that keeps the edge labels apart.
    """
    if (y2 - y1) % 3 == 2:
        return (a + 1) % 3, a
    return a, (a + 1) % 3


def ascending_pivot(counts: Sequence[int]) -> int:
    for a in range(3):
        if counts[a] <= counts[(a + 1) % 3] <= counts[(a + 2) % 3]:
            return a
    raise InvariantViolation(f"no ascending rotation of vertex counts {tuple(counts)}")


def label(
    T: Hypergraph, k: int, pair_rule: str = "table", check_steps: bool = False
) -> tuple[Labeling, LabelerTrace]:
    """A k-cordial labeling of the hypertree ``T`` and the trace of how it was built.

    Edgeless inputs are accepted whatever their vertex count.

    ``pair_rule="search"`` replaces the leaf-pair table (k = 3,
    ``m = 2 mod 3``) with a scan of all nine label pairs. ``check_steps``
    verifies every intermediate level as well as the result.
    """
    if k not in (2, 3):
        raise ContractViolation("the construction covers k = 2 and k = 3")
    if pair_rule not in ("table", "search"):
        raise ContractViolation(f"unknown pair rule {pair_rule!r}")
    if T.m:
        require_hypertree(T)
    case = T.m % k
    trace = LabelerTrace(k=k, edge_count=T.m, case=case)
    labels: list[Optional[int]] = [None] * T.n
    try:
        if case == 0:
            cfg = _pivot_for(T, k)
            trace.config = () if cfg is None else cfg.vertices
            _strong(T, k, cfg, labels, trace, check_steps)
        else:
            dropped = sorted(leaf_edges(T))[:case]
            trace.dropped_edges = dropped_t = tuple(dropped)
            deg = T.degrees
            leaves_used = tuple(min(v for v in T.edges[e - 1] if deg[v] == 1) for e in dropped_t) if case == 2 else ()
            trace.dropped_leaves = leaves_used
            core = remove(T, F=dropped_t, prune_isolated=True)
            cfg = _pivot_for(core, k)
            if cfg is not None:
                trace.config = tuple(core.vertex_origin[v - 1] for v in cfg.vertices)
            _strong(core, k, cfg, labels, trace, check_steps)
            rest = [v for v in T.vertices() if labels[v - 1] is None and v not in leaves_used]
            closing = fill_isolated(labels, k, rest)
            if case == 2:
                closing += _close_pair(T, labels, dropped_t, leaves_used, pair_rule, trace)
            trace.closing = tuple(closing)
    except InvariantViolation as exc:
        if exc.trace is None:
            exc.trace = trace
        raise
    f = Labeling(k, tuple(labels))
    if not is_k_cordial(T, f):
        raise InvariantViolation("constructed labeling is not cordial", trace)
    if case == 0 and trace.config and not is_strong_on(T, f, trace.config):
        raise InvariantViolation("constructed labeling is not strong on the pivot", trace)
    return f, trace


def _close_pair(T, labels, edges, leaves_used, rule, trace) -> list[tuple[int, int]]:
    counts = [0, 0, 0]
    for v, a in enumerate(labels, start=1):
        if v not in leaves_used:
            counts[a] += 1
    ys = []
    for e, leaf in zip(edges, leaves_used):
        ys.append(sum(labels[w - 1] for w in T.edges[e - 1] if w != leaf) % 3)
    a = ascending_pivot(counts)
    trace.pivot = a
    if rule == "table":
        pair = pair_labels(ys[0], ys[1], a)
    else:
        pair = _search_pair(counts, ys)
    out = list(zip(leaves_used, pair))
    for v, b in out:
        labels[v - 1] = b
    return out


def _search_pair(counts: Sequence[int], ys: Sequence[int]) -> tuple[int, int]:
    for p in range(3):
        for q in range(3):
            c = list(counts)
            c[p] += 1
            c[q] += 1
            if max(c) - min(c) <= 1 and (ys[0] + p) % 3 != (ys[1] + q) % 3:
                return p, q
    raise InvariantViolation(f"no leaf pair labels for counts {tuple(counts)} and sums {tuple(ys)}")
