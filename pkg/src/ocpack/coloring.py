"""Proper colorings with palette sizes bounded by the odd-cycle budget.

Two procedures:

* color_triangle_free: recursion on G minus the closed neighborhood of a
  shortest odd cycle C. The layer N[V(C)] is colored with a constant number
  of extra colors: a shield around three consecutive cycle vertices is split
  into neighborhood classes (independent because the graph is triangle-free),
  and the rest of the layer is bipartite, which is exactly the shield
  property of shortest odd cycles. Uses at most 2 + 5k colors for
  iocp(G) <= k, improving to 2 + 4k when the odd girth is at least 7 and to
  3 + k when the girth is at least 7 (the cycle then reuses recursion colors,
  which is safe because no edge leaves N[V(C)] from the cycle itself).

* color_bounded_iocp: takes a locally maximal clique K (no improving swap
  that removes <= 2 and adds <= 3 vertices), buckets every outside vertex by
  its up-to-3 smallest non-neighbors in K, and handles buckets by size:
  singleton buckets are independent and share the clique vertex's color,
  pair buckets are triangle-free, triple buckets have iocp <= k - 1 and
  recurse. The palette never exceeds f(k, omega(G)) where
  f(0, w) = 2 and f(k, w) = w + (2 + 5k) C(w, 2) + f(k - 1, w) C(w, 3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import PreconditionError
from .graph import (
    Coloring,
    Graph,
    closed_neighborhood,
    girth,
    induced_subgraph,
    shortest_odd_cycle,
    two_coloring,
)


def f_bound(k: int, omega: int) -> int:
    """Palette bound f(k, omega) of color_bounded_iocp."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if omega < 1:
        raise ValueError("omega must be at least 1")
    value = 2
    for depth in range(1, k + 1):
        value = (
            omega
            + (2 + 5 * depth) * math.comb(omega, 2)
            + value * math.comb(omega, 3)
        )
    return value


def _find_triangle(graph: Graph) -> tuple[int, int, int] | None:
    for u in range(graph.n):
        for v in graph.adj[u]:
            if v <= u:
                continue
            common = graph.bits[u] & graph.bits[v]
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def maximal_triangle_packing(graph: Graph):
    """Greedy vertex-disjoint triangles plus the triangle-free residual set.

    Repeatedly removes the lexicographically smallest triangle, so the result
    is deterministic and the residual contains no triangle.
    """
    triangles: list[tuple[int, int, int]] = []
    current = graph
    current_to_orig = tuple(range(graph.n))
    while True:
        tri = _find_triangle(current)
        if tri is None:
            break
        triangles.append(tuple(sorted(current_to_orig[v] for v in tri)))
        members = set(tri)
        keep = [v for v in range(current.n) if v not in members]
        current, _, new_to_old = induced_subgraph(current, keep)
        current_to_orig = tuple(current_to_orig[v] for v in new_to_old)
    return TrianglePacking(tuple(triangles), frozenset(current_to_orig))


class TrianglePacking(NamedTuple):
    triangles: tuple[tuple[int, int, int], ...]
    residual: frozenset[int]


def color_triangle_free(graph: Graph, k: int) -> Coloring:
    """Proper coloring of a triangle-free graph with iocp(G) <= k.

    Palette bounds: 2 + 5k in general, 2 + 4k when the odd girth is >= 7,
    3 + k when the girth is >= 7 (each measured per recursion level, so the
    top-level bound always holds). Raises PreconditionError with a triangle
    witness if the graph is not triangle-free; k < 0 raises ValueError.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    triangle = _find_triangle(graph)
    if triangle is not None:
        raise PreconditionError("graph contains a triangle", witness=triangle)
    out: dict[int, int] = {}
    _color_tf(graph, tuple(range(graph.n)), out)
    return _normalized(out, graph.n)


def _normalized(out: dict[int, int], n: int) -> Coloring:
    """Remap colors to 0.. in order of first appearance along vertex order."""
    remap: dict[int, int] = {}
    assignment = []
    for v in range(n):
        color = out[v]
        if color not in remap:
            remap[color] = len(remap)
        assignment.append(remap[color])
    return Coloring.from_assignment(tuple(assignment))


def _assign(out: dict[int, int], orig_ids, vertices, color: int) -> None:
    for v in vertices:
        out[orig_ids[v]] = color


def _color_tf(graph: Graph, orig_ids: tuple[int, ...], out: dict[int, int]) -> int:
    """Color ``graph`` into ``out`` under original ids; returns palette size."""
    cycle = shortest_odd_cycle(graph)
    if cycle is None:
        result = two_coloring(graph).coloring
        assert result is not None
        for v in range(graph.n):
            out[orig_ids[v]] = result.assignment[v]
        return max(result.assignment, default=-1) + 1
    layer = closed_neighborhood(graph, cycle.vertices)
    rest = sorted(set(range(graph.n)) - layer)
    sub, _, sub_ids = induced_subgraph(graph, rest)
    palette = _color_tf(sub, tuple(orig_ids[v] for v in sub_ids), out)

    if girth(graph) >= 7:
        # The cycle has no neighbors in the recursed part, so it can reuse
        # three recursion colors; its (independent) neighborhood gets one new.
        palette = max(palette, 3)
        length = cycle.length
        for i, v in enumerate(cycle.vertices):
            out[orig_ids[v]] = 2 if i == length - 1 else i % 2
        around = layer - set(cycle.vertices)
        assert _independent(graph, around), "cycle neighborhood must be independent"
        _assign(out, orig_ids, around, palette)
        return palette + 1

    z1, z2, z3 = cycle.vertices[0], cycle.vertices[1], cycle.vertices[2]
    shield = closed_neighborhood(graph, (z1, z2, z3))
    bipartite_part = sorted(layer - shield)
    sub2, _, sub2_ids = induced_subgraph(graph, bipartite_part)
    two = two_coloring(sub2).coloring
    assert two is not None, "layer minus shield must be bipartite"
    for v in range(sub2.n):
        out[orig_ids[sub2_ids[v]]] = palette + two.assignment[v]

    near2 = set(graph.adj[z2])
    if cycle.length >= 7:
        near13 = (set(graph.adj[z1]) | set(graph.adj[z3])) - {z1, z3}
        assert not near2 & near13, "triangle-free graphs split the shield cleanly"
        assert _independent(graph, near2) and _independent(graph, near13)
        _assign(out, orig_ids, near2, palette + 2)
        _assign(out, orig_ids, near13, palette + 3)
        assert shield <= near2 | near13
        return palette + 4

    near1 = set(graph.adj[z1]) - near2
    near3 = set(graph.adj[z3]) - near2 - near1
    for cls in (near2, near1, near3):
        assert _independent(graph, cls)
    _assign(out, orig_ids, near2, palette + 2)
    _assign(out, orig_ids, near1, palette + 3)
    _assign(out, orig_ids, near3, palette + 4)
    assert shield <= near2 | near1 | near3
    return palette + 5


def _independent(graph: Graph, vertices) -> bool:
    members = set(vertices)
    return all(not members & set(graph.adj[v]) for v in members)


@dataclass(frozen=True)
class CliqueCertificate:
    """A clique plus the verified no-improving-swap flag.

    locally_maximal means: no clique K' with |K'| > |K|, |K \\ K'| <= 2 and
    |K' \\ K| <= 3 exists (checked exhaustively in a final verification pass).
    """

    vertices: frozenset[int]
    locally_maximal: bool


def _greedy_clique(graph: Graph) -> list[int]:
    if graph.n == 0:
        return []
    start = max(range(graph.n), key=lambda v: (graph.degree(v), -v))
    clique = [start]
    common = graph.bits[start]
    while common:
        candidates = []
        m = common
        while m:
            b = m & -m
            m ^= b
            candidates.append(b.bit_length() - 1)
        best = max(candidates, key=lambda v: ((graph.bits[v] & common).bit_count(), -v))
        clique.append(best)
        common &= graph.bits[best]
    return sorted(clique)


def _improving_swap(graph: Graph, clique: list[int]) -> list[int] | None:
    """First clique obtainable by removing <= 2 and adding <= 3 vertices that
    is strictly larger, or None. Deterministic enumeration order."""
    k = len(clique)
    clique_bits = 0
    for v in clique:
        clique_bits |= 1 << v
    drops: list[tuple[int, ...]] = [()]
    drops += [(v,) for v in clique]
    drops += [
        (clique[i], clique[j])
        for i in range(k)
        for j in range(i + 1, k)
    ]
    full = (1 << graph.n) - 1
    for drop in drops:
        kept = [v for v in clique if v not in drop]
        common = full & ~clique_bits
        for v in kept:
            common &= graph.bits[v]
        candidates = []
        m = common
        while m:
            b = m & -m
            m ^= b
            candidates.append(b.bit_length() - 1)
        need = len(drop) + 1
        found = _clique_among(graph, candidates, need, 3)
        if found is not None:
            return sorted(kept + found)
    return None


def _clique_among(graph: Graph, candidates: list[int], low: int, high: int) -> list[int] | None:
    """Lexicographically first clique among candidates of size in low..high."""
    if low <= 0:
        return []
    for size in range(low, high + 1):
        if size > len(candidates):
            break
        found = _sized_clique(graph, candidates, size, 0, [])
        if found is not None:
            return found
    return None


def _sized_clique(graph, candidates, size, start, prefix) -> list[int] | None:
    if size == 0:
        return list(prefix)
    for i in range(start, len(candidates) - size + 1):
        v = candidates[i]
        if all(graph.has_edge(v, u) for u in prefix):
            prefix.append(v)
            found = _sized_clique(graph, candidates, size - 1, i + 1, prefix)
            prefix.pop()
            if found is not None:
                return found
    return None


def locally_maximal_clique(graph: Graph) -> CliqueCertificate:
    """Greedy clique improved by remove-<=2/add-<=3 swaps until none applies.

    The certificate flag comes from one final exhaustive re-check of all
    swaps. Raises ValueError on the empty graph.
    """
    if graph.n == 0:
        raise ValueError("clique of an empty graph is undefined")
    clique = _greedy_clique(graph)
    while True:
        improved = _improving_swap(graph, clique)
        if improved is None:
            break
        clique = improved
    verified = _improving_swap(graph, clique) is None
    return CliqueCertificate(frozenset(clique), verified)


def color_bounded_iocp(graph: Graph, k: int) -> Coloring:
    """Proper coloring of a graph with iocp(G) <= k, palette <= f(k, omega).

    Properness holds unconditionally; the palette bound needs iocp(G) <= k.
    k < 0 raises ValueError.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    out: dict[int, int] = {}
    _color_general(graph, tuple(range(graph.n)), k, out)
    return _normalized(out, graph.n)


def _greedy_coloring(graph: Graph, orig_ids, out: dict[int, int]) -> int:
    palette = 0
    for v in range(graph.n):
        used = {out[orig_ids[u]] for u in graph.adj[v] if orig_ids[u] in out}
        color = 0
        while color in used:
            color += 1
        out[orig_ids[v]] = color
        palette = max(palette, color + 1)
    return palette


def _color_general(graph: Graph, orig_ids: tuple[int, ...], k: int, out: dict[int, int]) -> int:
    if graph.n == 0:
        return 0
    bichrome = two_coloring(graph).coloring
    if bichrome is not None:
        for v in range(graph.n):
            out[orig_ids[v]] = bichrome.assignment[v]
        return max(bichrome.assignment, default=-1) + 1
    if k == 0:
        # Broken caller precondition (non-bipartite with budget 0): stay
        # proper with a deterministic greedy coloring.
        return _greedy_coloring(graph, orig_ids, out)
    certificate = locally_maximal_clique(graph)
    clique = sorted(certificate.vertices)
    index_of = {z: i for i, z in enumerate(clique)}
    for z in clique:
        out[orig_ids[z]] = index_of[z]
    buckets: dict[tuple[int, ...], list[int]] = {}
    for v in range(graph.n):
        if v in index_of:
            continue
        missing = [z for z in clique if not graph.has_edge(v, z)]
        assert missing, "locally maximal clique admits no fully adjacent outsider"
        buckets.setdefault(tuple(missing[:3]), []).append(v)
    next_color = len(clique)
    for signature in sorted(buckets):
        members = buckets[signature]
        if len(signature) == 1:
            assert _independent(graph, members)
            for v in members:
                out[orig_ids[v]] = index_of[signature[0]]
            continue
        sub, _, sub_ids = induced_subgraph(graph, members)
        child_ids = tuple(orig_ids[v] for v in sub_ids)
        if len(signature) == 2:
            block = color_triangle_free(sub, k)
            for v in range(sub.n):
                out[child_ids[v]] = next_color + block.assignment[v]
            next_color += block.color_count
        else:
            used = _color_general(sub, child_ids, k - 1, _offset_dict(out, next_color))
            next_color += used
    return next_color


class _offset_dict:
    """Write-through view shifting assigned colors by a fixed offset."""

    def __init__(self, target, offset: int) -> None:
        self.target = target
        self.offset = offset

    def __setitem__(self, key: int, value: int) -> None:
        self.target[key] = value + self.offset

    def __getitem__(self, key: int) -> int:
        return self.target[key] - self.offset

    def __contains__(self, key: int) -> bool:
        return key in self.target
