"""Text formats: ``.ht`` hypergraphs, labelings, and DOT export.

``.ht``: first line ``n m``, then ``m`` lines of space-separated 1-based
vertex ids. ``#`` starts a comment; blank lines are ignored.

Labelings: first line ``k``, then ``n`` lines ``vertex residue``, then ``m``
lines ``edge residue`` holding the induced edge labels. The edge lines are
informational; the parser checks them when present.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .hypergraph import Hypergraph
from .labeling import Labeling, edge_labels


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(text: str) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    """Yield ``(line_number, [(column, token), ...])`` for non-empty lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in body.split():
            col = body.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            yield lineno, toks


def _int(tok: tuple[int, str], line: int) -> int:
    col, s = tok
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got {s!r}", line, col) from None


def parse_ht(text: str) -> Hypergraph:
    lines = _tokens(text)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise ParseError("missing 'n m' count line", 1) from None
    if len(head) != 2:
        raise ParseError("count line must be 'n m'", lineno, head[0][0])
    n, m = (_int(t, lineno) for t in head)
    if n < 0 or m < 0:
        raise ParseError("counts must be non-negative", lineno, head[0][0])
    edges = []
    for lineno, toks in lines:
        if len(edges) == m:
            raise ParseError(f"more than {m} edge lines", lineno, toks[0][0])
        if len(toks) < 2:
            raise ParseError("edge must have at least 2 vertices", lineno, toks[0][0])
        seen = set()
        for tok in toks:
            v = _int(tok, lineno)
            if not 1 <= v <= n:
                raise ParseError(f"vertex id {v} out of range 1..{n}", lineno, tok[0])
            if v in seen:
                raise ParseError(f"duplicate vertex {v} in edge", lineno, tok[0])
            seen.add(v)
        edges.append(tuple(_int(t, lineno) for t in toks))
    if len(edges) != m:
        raise ParseError(f"expected {m} edge lines, found {len(edges)}", lineno + 1)
    return Hypergraph(n, tuple(edges))


def write_ht(H: Hypergraph) -> str:
    out = [f"{H.n} {H.m}"]
    out.extend(" ".join(map(str, e)) for e in H.sorted_edges())
    return "\n".join(out) + "\n"


def write_labeling(H: Hypergraph, f: Labeling) -> str:
    out = [str(f.modulus)]
    out.extend(f"{v} {f[v]}" for v in H.vertices())
    out.extend(f"{i} {a}" for i, a in enumerate(edge_labels(H, f), start=1))
    return "\n".join(out) + "\n"


def parse_labeling(text: str, H: Optional[Hypergraph] = None) -> Labeling:
    """Read a labeling. With ``H`` the vertex count and edge lines are checked."""
    lines = list(_tokens(text))
    if not lines or len(lines[0][1]) != 1:
        raise ParseError("first line must be the modulus k", lines[0][0] if lines else 1)
    lineno, (tok,) = lines[0]
    k = _int(tok, lineno)
    if k < 2:
        raise ParseError("modulus must be at least 2", lineno, tok[0])
    n = H.n if H is not None else len(lines) - 1
    if len(lines) - 1 < n:
        raise ParseError(f"expected {n} vertex lines, found {len(lines) - 1}", lines[-1][0] + 1)
    labels = []
    for i, (lineno, toks) in enumerate(lines[1 : n + 1], start=1):
        if len(toks) != 2:
            raise ParseError("expected 'vertex residue'", lineno, toks[0][0])
        v, a = (_int(t, lineno) for t in toks)
        if v != i:
            raise ParseError(f"expected vertex {i}, got {v}", lineno, toks[0][0])
        if not 0 <= a < k:
            raise ParseError(f"residue {a} out of range 0..{k - 1}", lineno, toks[1][0])
        labels.append(a)
    f = Labeling(k, tuple(labels))
    if H is not None:
        rest = lines[n + 1 :]
        if rest and len(rest) != H.m:
            raise ParseError(f"expected {H.m} edge lines, found {len(rest)}", rest[0][0])
        induced = edge_labels(H, f)
        for i, (lineno, toks) in enumerate(rest, start=1):
            if len(toks) != 2:
                raise ParseError("expected 'edge residue'", lineno, toks[0][0])
            e, a = (_int(t, lineno) for t in toks)
            if e != i or a != induced[i - 1]:
                raise ParseError(f"edge line disagrees with induced label of edge {i}", lineno, toks[0][0])
    return f


def to_dot(H: Hypergraph, f: Optional[Labeling] = None) -> str:
    """Incidence graph as an undirected DOT graph."""
    out = ["graph incidence {"]
    for v in H.vertices():
        cap = f"{v}" if f is None else f"{v}: {f[v]}"
        out.append(f'  v{v} [shape=circle, label="{cap}"];')
    induced = edge_labels(H, f) if f is not None else None
    for i in range(1, H.m + 1):
        cap = f"e{i}" if induced is None else f"e{i}: {induced[i - 1]}"
        out.append(f'  e{i} [shape=box, label="{cap}"];')
    for i, e in enumerate(H.sorted_edges(), start=1):
        for v in e:
            out.append(f"  v{v} -- e{i};")
    out.append("}")
    return "\n".join(out) + "\n"
