"""Weighted independent sets in graphs whose shortest odd cycle is long.

The solver peels the graph along a shortest odd cycle C: it picks 2b cycle
vertices spaced at least 8b - 3 apart, and for each index i removes both the
BFS layer at distance exactly i from C and the radius-(4b - 2) ball around
the i-th chosen vertex, recursing with budget k - 1. Whenever the current
graph is bipartite the exact flow solver finishes the job. With iocp(G) <= k
and odd girth >= 2b(8b - 3), the heaviest branch weighs at least
(1 - k/b) times the weighted independence number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .flow import max_weight_independent_set_bipartite
from .graph import (
    Graph,
    OddCycle,
    VertexWeights,
    bfs_distances,
    induced_subgraph,
    shortest_odd_cycle,
    two_coloring,
)


@dataclass(frozen=True)
class PackingResult:
    """Vertex-disjoint induced odd cycles plus the leftover vertex set."""

    cycles: tuple[OddCycle, ...]
    residual: frozenset[int]


def maximal_short_odd_packing(graph: Graph, girth_bound: int) -> PackingResult:
    """Greedily extract shortest odd cycles of length below ``girth_bound``.

    Each extracted cycle is induced in the residual graph at extraction time;
    the loop stops once the residual has no odd cycle shorter than the bound,
    so the residual's odd girth is at least ``girth_bound``. Edges between
    extracted cycles are allowed (only vertex-disjointness is maintained).
    """
    if girth_bound < 3:
        raise ValueError("girth bound must be at least 3")
    cycles: list[OddCycle] = []
    current = graph
    current_to_orig = tuple(range(graph.n))
    while True:
        cycle = shortest_odd_cycle(current)
        if cycle is None or cycle.length >= girth_bound:
            break
        cycles.append(OddCycle(tuple(current_to_orig[v] for v in cycle.vertices)))
        members = set(cycle.vertices)
        keep = [v for v in range(current.n) if v not in members]
        current, _, new_to_old = induced_subgraph(current, keep)
        current_to_orig = tuple(current_to_orig[v] for v in new_to_old)
    return PackingResult(tuple(cycles), frozenset(current_to_orig))


def select_spaced_cycle_vertices(cycle, count: int, spacing: int) -> list[int]:
    """``count`` cycle vertices with pairwise cyclic distance >= ``spacing``.

    Accepts an OddCycle or a plain vertex sequence. Vertices are taken at
    positions 0, s, 2s, ... with s = floor(length / count); the final wrap
    gap is length - (count - 1) s >= s, so all pairwise cyclic distances are
    at least s >= spacing whenever length >= count * spacing.
    """
    vertices = tuple(getattr(cycle, "vertices", cycle))
    length = len(vertices)
    if count < 1 or spacing < 1:
        raise ValueError("count and spacing must be positive")
    if length < count * spacing:
        raise PreconditionError(
            f"cycle of length {length} cannot host {count} vertices {spacing} apart"
        )
    step = length // count
    positions = [i * step for i in range(count)]
    for a in range(count):
        for b in range(a + 1, count):
            gap = positions[b] - positions[a]
            if min(gap, length - gap) < spacing:
                raise AssertionError("spacing violated by evenly stepped positions")
    return [vertices[p] for p in positions]


def greedy_independent_set(graph: Graph, weights: VertexWeights | None = None) -> frozenset[int]:
    """Deterministic greedy independent set (weight desc, degree asc, index).

    Used as the unconditional-safety fallback when a caller's iocp budget is
    exhausted but the graph is still not bipartite; the output is always
    independent, with no quality guarantee.
    """
    if weights is None:
        weights = VertexWeights.unit(graph.n)
    order = sorted(range(graph.n), key=lambda v: (-weights[v], graph.degree(v), v))
    chosen_bits = 0
    chosen = []
    for v in order:
        if not graph.bits[v] & chosen_bits:
            chosen_bits |= 1 << v
            chosen.append(v)
    return frozenset(chosen)


def no_short_odd_solve(graph: Graph, weights: VertexWeights | None, k: int, b: int) -> frozenset[int]:
    """Heavy independent set in a graph with odd girth >= 2b(8b - 3).

    Returns a set of weight at least (1 - k/b) of the weighted independence
    number whenever iocp(G) <= k and the odd-girth precondition holds; the
    returned set is independent unconditionally. Raises PreconditionError if
    the odd girth is below the threshold and ValueError for k < 0 or b < 1.
    """
    if k < 0:
        raise ValueError(f"iocp budget k must be non-negative, got {k}")
    if b < 1:
        raise ValueError(f"parameter b must be positive, got {b}")
    if weights is None:
        weights = VertexWeights.unit(graph.n)
    weights.check_domain(graph)
    threshold = 2 * b * (8 * b - 3)
    cycle = shortest_odd_cycle(graph)
    if cycle is not None and cycle.length < threshold:
        raise PreconditionError(
            f"odd girth {cycle.length} below required {threshold}", witness=cycle
        )
    return frozenset(_solve(graph, weights.values, k, b, cycle))


def _solve(graph: Graph, wvals: tuple[int, ...], k: int, b: int, cycle: OddCycle | None) -> set[int]:
    if cycle is None:
        if two_coloring(graph).coloring is None:
            raise AssertionError("cycle cache disagrees with bipartiteness")
        return set(max_weight_independent_set_bipartite(graph, VertexWeights(wvals)))
    if k <= 0:
        return set(greedy_independent_set(graph, VertexWeights(wvals)))
    chosen = select_spaced_cycle_vertices(cycle, 2 * b, 8 * b - 3)
    dist_cycle = bfs_distances(graph, cycle.vertices)
    radius = 4 * b - 2
    if __debug__:
        balls = []
    best: set[int] | None = None
    best_weight = -1
    for i in range(1, 2 * b + 1):
        z = chosen[i - 1]
        dist_z = bfs_distances(graph, [z])
        if __debug__:
            ball = frozenset(v for v in range(graph.n) if 0 <= dist_z[v] <= radius)
            for other in balls:
                assert not ball & other, "shielding balls must be disjoint"
            balls.append(ball)
        keep = [
            v
            for v in range(graph.n)
            if dist_cycle[v] != i and not 0 <= dist_z[v] <= radius
        ]
        sub, _, new_to_old = induced_subgraph(graph, keep)
        sub_weights = tuple(wvals[v] for v in new_to_old)
        sub_cycle = shortest_odd_cycle(sub)
        branch = _solve(sub, sub_weights, k - 1, b, sub_cycle)
        mapped = {new_to_old[v] for v in branch}
        weight = sum(wvals[v] for v in mapped)
        if weight > best_weight:
            best = mapped
            best_weight = weight
    assert best is not None
    return best
