"""Seeded random hypertrees and exhaustive small families.

Random generation uses :class:`random.Random` (Mersenne Twister, seeded with
the given integer). Every edge after the first is anchored at one existing
vertex and filled with fresh ones, which keeps the result a hypertree. The
draws per edge are, in order: ``size = randint(size_min, size_max)``, then
for edges after the first ``anchor = randint(1, n_so_far)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class GenParams:
    seed: int
    edges: int
    size_min: int = 2
    size_max: int = 3

    def __post_init__(self):
        if self.edges < 1:
            raise ValueError(f"edge count must be at least 1, got {self.edges}")
        if self.size_min < 2 or self.size_max < self.size_min:
            raise ValueError(f"bad edge size range [{self.size_min}, {self.size_max}]")


def _grow(rng: random.Random, m: int, size_min: int, size_max: int, max_vertices: Optional[int] = None):
    edges = []
    n = 0
    for i in range(m):
        s = rng.randint(size_min, size_max)
        if i == 0:
            if max_vertices is not None:
                s = min(s, max_vertices)
            edges.append(tuple(range(1, s + 1)))
            n = s
            continue
        if max_vertices is not None:
            s = min(s, max_vertices - n + 1)
            if s < 2:
                break
        anchor = rng.randint(1, n)
        edges.append((anchor,) + tuple(range(n + 1, n + s)))
        n += s - 1
    return Hypergraph(n, tuple(edges))


def random_hypertree(p: GenParams) -> Hypergraph:
    return _grow(random.Random(p.seed), p.edges, p.size_min, p.size_max)


def random_small_hypertree(seed: int, max_vertices: int, size_min: int = 2, size_max: int = 4) -> Hypergraph:
    """Random hypertree with at most ``max_vertices`` vertices.

    The target edge count is drawn first, uniform in ``1..max_vertices-1``;
    growth stops early once no edge of size 2 fits.
    """
    if max_vertices < 2:
        raise ValueError("need room for at least one edge")
    rng = random.Random(seed)
    m = rng.randint(1, max_vertices - 1)
    return _grow(rng, m, size_min, size_max, max_vertices=max_vertices)


def trial_params(seed: int, trial: int, max_edges: int, size_min: int = 2, size_max: int = 6) -> GenParams:
    """Per-trial generator parameters derived from a campaign seed."""
    rng = random.Random(f"{seed}:{trial}")
    return GenParams(
        seed=rng.getrandbits(63),
        edges=rng.randint(1, max_edges),
        size_min=size_min,
        size_max=size_max,
    )


def canonical_form(H: Hypergraph) -> tuple[int, tuple[tuple[int, ...], ...]]:
    return H.n, tuple(sorted(H.sorted_edges()))


def enumerate_small_hypertrees(max_m: int, sizes: Iterable[int] = (2,)) -> Iterator[Hypergraph]:
    """Every hypertree with 1..max_m edges reachable by anchored attachment.

    The first edge is ``{1..s}``; each further edge is anchored at every
    existing vertex in turn, with every allowed size, and takes the next
    fresh ids. Duplicates by sorted edge list are skipped. Ids are labeled,
    not reduced up to isomorphism.
    """
    sizes = sorted(set(sizes))
    if max_m > 5:
        raise ValueError("max_m above 5 is too large to enumerate")
    if not sizes or min(sizes) < 2 or max(sizes) > 3:
        raise ValueError("sizes must be a non-empty subset of {2, 3}")
    seen = set()

    def rec(n: int, edges: tuple):
        H = Hypergraph(n, edges)
        key = canonical_form(H)
        if key in seen:
            return
        seen.add(key)
        yield H
        if len(edges) == max_m:
            return
        for anchor in range(1, n + 1):
            for s in sizes:
                new = (anchor,) + tuple(range(n + 1, n + s))
                yield from rec(n + s - 1, edges + (new,))

    if max_m < 1:
        return
    for s in sizes:
        yield from rec(s, (tuple(range(1, s + 1)),))
