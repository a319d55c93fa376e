"""Hypergraphs with 1-based vertex and edge ids, structure queries and removal."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import ContractViolation, NotAHypertreeError, ValidationError


@dataclass(frozen=True)
class Hypergraph:
    """Vertices ``1..n`` and edges ``1..m`` (``edges[i-1]`` is edge ``i``).

    ``vertex_origin[v-1]`` / ``edge_origin[e-1]`` give the id each vertex/edge
    had in the hypergraph this one was cut out of by :func:`remove`
    (transitively, so they always point at the root ids). They do not take
    part in equality.
    """

    n: int
    edges: tuple[frozenset[int], ...] = ()
    vertex_origin: tuple[int, ...] = field(default=None, compare=False, repr=False)
    edge_origin: tuple[int, ...] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {self.n}")
        edges = tuple(frozenset(e) for e in self.edges)
        for i, (raw, e) in enumerate(zip(self.edges, edges), start=1):
            if len(e) != len(raw):
                raise ValidationError(f"edge {i} repeats a vertex", edge_index=i)
            if len(e) < 2:
                raise ValidationError(f"edge {i} has fewer than 2 vertices", edge_index=i)
            for v in e:
                if not 1 <= v <= self.n:
                    raise ValidationError(
                        f"edge {i} contains vertex {v} outside 1..{self.n}", edge_index=i
                    )
        object.__setattr__(self, "edges", edges)
        if self.vertex_origin is None:
            object.__setattr__(self, "vertex_origin", tuple(range(1, self.n + 1)))
        if self.edge_origin is None:
            object.__setattr__(self, "edge_origin", tuple(range(1, len(edges) + 1)))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> Hypergraph:
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges if e), default=0)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge(self, i: int) -> frozenset[int]:
        if not 1 <= i <= self.m:
            raise ContractViolation(f"edge id {i} outside 1..{self.m}")
        return self.edges[i - 1]

    @cached_property
    def incidence(self) -> list[list[int]]:
        # incidence[v] lists the edge ids containing v; index 0 is unused.
        # Treat as read-only.
        inc: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, e in enumerate(self.edges, start=1):
            for v in e:
                inc[v].append(i)
        return inc

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * (self.n + 1)
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ContractViolation(f"vertex id {v} outside 1..{self.n}")
        return self.degrees[v]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    @classmethod
    def _trusted(cls, n, edges, vertex_origin, edge_origin) -> Hypergraph:
        # skips validation; only for values derived from an already valid hypergraph
        H = object.__new__(cls)
        object.__setattr__(H, "n", n)
        object.__setattr__(H, "edges", edges)
        object.__setattr__(H, "vertex_origin", vertex_origin)
        object.__setattr__(H, "edge_origin", edge_origin)
        return H

    def sorted_edges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(e)) for e in self.edges)


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite view: vertex node ``v`` is adjacent to edge node ``e`` iff ``v in e``."""

    vertex_side: tuple[tuple[int, ...], ...]  # indexed by vertex id, 0 unused
    edge_side: tuple[tuple[int, ...], ...]  # indexed by edge id, 0 unused

    def adjacent(self, v: int, e: int) -> bool:
        return e in self.vertex_side[v]


def incidence_graph(H: Hypergraph) -> IncidenceGraph:
    return IncidenceGraph(
        vertex_side=tuple(map(tuple, H.incidence)),
        edge_side=((),) + tuple(tuple(sorted(e)) for e in H.edges),
    )


@dataclass(frozen=True)
class StructureReport:
    is_connected: bool
    has_cycle: bool
    is_hypertree: bool
    isolated_vertices: frozenset[int]


def analyze(H: Hypergraph) -> StructureReport:
    """Connectivity and acyclicity of the incidence graph of ``H``."""
    # union-find over vertex nodes 1..n and edge nodes n+1..n+m
    parent = list(range(H.n + H.m + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    has_cycle = False
    for i, e in enumerate(H.edges, start=1):
        enode = H.n + i
        for v in e:
            ra, rb = find(v), find(enode)
            if ra == rb:
                has_cycle = True
            else:
                parent[ra] = rb
    roots = {find(a) for a in range(1, H.n + H.m + 1)}
    connected = len(roots) <= 1
    isolated = frozenset(v for v in H.vertices() if H.degrees[v] == 0)
    return StructureReport(
        is_connected=connected,
        has_cycle=has_cycle,
        is_hypertree=connected and not has_cycle,
        isolated_vertices=isolated,
    )


def is_hypertree(H: Hypergraph) -> bool:
    return analyze(H).is_hypertree


def require_hypertree(H: Hypergraph) -> None:
    rep = analyze(H)
    if not rep.is_hypertree:
        why = "has a cycle" if rep.has_cycle else "is not connected"
        raise NotAHypertreeError(f"hypergraph {why}")


def degree(H: Hypergraph, v: int) -> int:
    return H.degree(v)


def leaf_edges(H: Hypergraph) -> frozenset[int]:
    """Edges containing at most one vertex of degree greater than one."""
    deg = H.degrees
    return frozenset(
        i for i, e in enumerate(H.edges, start=1) if sum(1 for v in e if deg[v] > 1) <= 1
    )


def leaves(H: Hypergraph) -> frozenset[int]:
    """Degree-one vertices lying in a leaf-edge."""
    deg = H.degrees
    out = set()
    for i in leaf_edges(H):
        out.update(v for v in H.edges[i - 1] if deg[v] == 1)
    return frozenset(out)


def is_linear(H: Hypergraph) -> bool:
    """Every two edges share at most one vertex."""
    seen_pairs = set()
    for e in H.edges:
        s = sorted(e)
        for a in range(len(s)):
            for b in range(a + 1, len(s)):
                p = (s[a], s[b])
                if p in seen_pairs:
                    return False
                seen_pairs.add(p)
    return True


def remove(
    H: Hypergraph,
    W: Iterable[int] = (),
    F: Iterable[int] = (),
    prune_isolated: bool = False,
) -> Hypergraph:
    """Drop vertices ``W`` (with every edge meeting them) and edges ``F``.

    With ``prune_isolated`` the vertices left without edges are dropped too.
    Surviving vertices and edges are renumbered densely in increasing order;
    the result's origin maps point back at ``H``'s origin ids.
    """
    W = frozenset(W)
    F = set(F)
    if W:
        kept_edges = [
            i for i, e in enumerate(H.edges, start=1) if i not in F and W.isdisjoint(e)
        ]
    else:
        kept_edges = [i for i in range(1, H.m + 1) if i not in F]
    if prune_isolated:
        used = set()
        for i in kept_edges:
            used |= H.edges[i - 1]
        kept_vertices = sorted(used)
    else:
        kept_vertices = [v for v in H.vertices() if v not in W]
    new_id = {v: j for j, v in enumerate(kept_vertices, start=1)}
    get = new_id.__getitem__
    edges = H.edges
    new_edges = tuple(frozenset(map(get, edges[i - 1])) for i in kept_edges)
    vo, eo = H.vertex_origin, H.edge_origin
    return Hypergraph._trusted(
        len(kept_vertices),
        new_edges,
        tuple(vo[v - 1] for v in kept_vertices),
        tuple(eo[i - 1] for i in kept_edges),
    )


def components(
    H: Hypergraph, removed: Iterable[int] = ()
) -> tuple[list[int], list[list[int]]]:
    """Components of ``H - removed``.

    Returns ``(comp_of_vertex, edges_per_component)`` where
    ``comp_of_vertex[v]`` is a component index (-1 for removed vertices and
    index 0) and ``edges_per_component[c]`` lists the edge ids in component c.
    """
    removed = set(removed)
    alive_edge = [False] + [not (e & removed) for e in H.edges]
    comp = [-1] * (H.n + 1)
    comp_edges: list[list[int]] = []
    inc = H.incidence
    for s in H.vertices():
        if s in removed or comp[s] != -1:
            continue
        c = len(comp_edges)
        comp_edges.append([])
        comp[s] = c
        stack = [s]
        seen_edge = set()
        while stack:
            v = stack.pop()
            for i in inc[v]:
                if not alive_edge[i] or i in seen_edge:
                    continue
                seen_edge.add(i)
                comp_edges[c].append(i)
                for w in H.edges[i - 1]:
                    if comp[w] == -1:
                        comp[w] = c
                        stack.append(w)
    return comp, comp_edges


def edge_count_identity(T: Hypergraph) -> bool:
    """Check ``m = 1 + sum(d(v) - 1)`` for a non-trivial hypertree."""
    if T.m == 0 or not is_hypertree(T):
        raise ContractViolation("edge-count identity needs a non-trivial hypertree")
    return T.m == 1 + sum(d - 1 for d in T.degrees[1:])

