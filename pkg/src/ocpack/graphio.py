"""Plain-text graph files: one header, one line per edge, optional weights.

Grammar (1-indexed vertices, whitespace-separated tokens):

    c <anything>        comment, anywhere
    p <n> <m>           exactly once, before any e/w line
    e <u> <v>           edge; 1 <= u,v <= n, u != v, no duplicates either way
    w <v> <weight>      integer weight >= 1; at most one per vertex; default 1

Canonical emission: the p line, then edges sorted with the smaller endpoint
first, then weight lines for non-unit weights sorted by vertex. Parsing a
canonical file and emitting it again is the identity.
"""

from __future__ import annotations

from typing import TextIO

from .errors import GraphParseError
from .graph import Graph, VertexWeights


def parse_graph(source: str | TextIO) -> tuple[Graph, VertexWeights]:
    """Parse a graph file from a string or text stream.

    Raises GraphParseError (carrying the 1-based line number) on any
    malformed, out-of-range, duplicate, or missing declaration.
    """
    text = source if isinstance(source, str) else source.read()
    n = m = -1
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weight_by_vertex: dict[int, int] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "p":
            if n >= 0:
                raise GraphParseError("duplicate p line", line_number)
            n, m = _two_ints(tokens, line_number, "p <n> <m>")
            if n < 0 or m < 0:
                raise GraphParseError("n and m must be non-negative", line_number)
        elif kind == "e":
            if n < 0:
                raise GraphParseError("e line before p line", line_number)
            u, v = _two_ints(tokens, line_number, "e <u> <v>")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(
                    f"vertex out of range 1..{n} in edge {u} {v}", line_number
                )
            if u == v:
                raise GraphParseError(f"self-loop at vertex {u}", line_number)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphParseError(f"duplicate edge {u} {v}", line_number)
            seen.add(key)
            edges.append((u - 1, v - 1))
        elif kind == "w":
            if n < 0:
                raise GraphParseError("w line before p line", line_number)
            v, weight = _two_ints(tokens, line_number, "w <v> <weight>")
            if not 1 <= v <= n:
                raise GraphParseError(f"vertex {v} out of range 1..{n}", line_number)
            if weight < 1:
                raise GraphParseError(f"weight must be >= 1, got {weight}", line_number)
            if v in weight_by_vertex:
                raise GraphParseError(f"duplicate weight for vertex {v}", line_number)
            weight_by_vertex[v] = weight
        else:
            raise GraphParseError(f"unknown line type {kind!r}", line_number)
    if n < 0:
        raise GraphParseError("missing p line")
    if len(edges) != m:
        raise GraphParseError(f"p line declares {m} edges, file has {len(edges)}")
    graph = Graph(n, edges)
    weights = VertexWeights(
        tuple(weight_by_vertex.get(v + 1, 1) for v in range(n))
    )
    return graph, weights


def _two_ints(tokens: list[str], line_number: int, form: str) -> tuple[int, int]:
    if len(tokens) != 3:
        raise GraphParseError(f"expected {form}", line_number)
    try:
        return int(tokens[1]), int(tokens[2])
    except ValueError:
        raise GraphParseError(f"expected {form} with integer fields", line_number) from None


def emit_graph(graph: Graph, weights: VertexWeights | None = None) -> str:
    """Canonical file text for a graph and (optionally) its weights."""
    lines = [f"p {graph.n} {graph.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in sorted(graph.edges()))
    if weights is not None:
        weights.check_domain(graph)
        lines.extend(
            f"w {v + 1} {weights[v]}"
            for v in range(graph.n)
            if weights[v] != 1
        )
    return "\n".join(lines) + "\n"
