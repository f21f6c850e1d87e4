"""Seeded graph generators: random models, fixed families, and the
pruned-complement lower-bound construction.

The pruned-complement construction samples G(n, 1/k) with n = k^2/2,
greedily deletes complete bipartite K_{3,3} blocks (nine edges each) until
none remains between disjoint triples, and returns the complement H of the
pruned graph. H is the hard instance family: its independence number stays
at most 5 while its chromatic number grows with n, and it contains no pair
of disjoint induced odd cycles without connecting edges.

All generators are pure functions of (parameters, seed); the same call is
bit-reproducible across processes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GenerationError
from .graph import Graph, complement, odd_girth
from .seeding import check_seed, derive_seed

ATTACH_RETRY_BUDGET = 200
_ALPHA_ORACLE_CEILING = 20


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each unordered pair is an edge with probability p.

    Pairs are drawn in lexicographic order from one seeded stream, so a
    given (n, p, seed) always yields the same graph.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p!r}")
    check_seed(seed)
    rng = random.Random(derive_seed(seed, "gnp", n, p))
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs >= 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs >= 1 vertex, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both sides need >= 1 vertex")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def mycielski(graph: Graph) -> Graph:
    """Mycielski extension: same clique number, chromatic number + 1."""
    n = graph.n
    edges = list(graph.edges())
    for u, v in graph.edges():
        edges.append((u, n + v))
        edges.append((v, n + u))
    apex = 2 * n
    edges.extend((n + v, apex) for v in range(n))
    return Graph(2 * n + 1, edges)


def groetzsch() -> Graph:
    """The triangle-free graph on 11 vertices with chromatic number 4."""
    return mycielski(cycle_graph(5))


def gen_disjoint_odd_cycles(lengths) -> Graph:
    """Disjoint union of odd cycles; its iocp equals the number of cycles."""
    lengths = list(lengths)
    for length in lengths:
        if length < 3 or length % 2 == 0:
            raise ValueError(f"cycle lengths must be odd and >= 3, got {length}")
    edges = []
    offset = 0
    for length in lengths:
        edges.extend(
            (offset + i, offset + (i + 1) % length) for i in range(length)
        )
        offset += length
    return Graph(offset, edges)


def gen_high_odd_girth(
    n_bipartite: int,
    cycle_lengths,
    attach_edges: int,
    seed: int,
    bipartite_p: float = 0.3,
) -> Graph:
    """Random bipartite part plus disjoint odd cycles plus safe cross edges.

    Each of the attach_edges cross edges (bipartite side to cycle side) is
    sampled uniformly and rejected if it would duplicate an edge or drop the
    odd girth below the shortest requested cycle; after ATTACH_RETRY_BUDGET
    consecutive rejections a GenerationError is raised. The result always
    has odd girth >= min(cycle_lengths) (infinite when no cycles are given).
    """
    if n_bipartite < 0:
        raise ValueError(f"n_bipartite must be >= 0, got {n_bipartite}")
    if attach_edges < 0:
        raise ValueError(f"attach_edges must be >= 0, got {attach_edges}")
    check_seed(seed)
    lengths = list(cycle_lengths)
    for length in lengths:
        if length < 3 or length % 2 == 0:
            raise ValueError(f"cycle lengths must be odd and >= 3, got {length}")
    rng = random.Random(derive_seed(seed, "highoddgirth", n_bipartite, tuple(lengths), attach_edges))
    sides = [rng.randrange(2) for _ in range(n_bipartite)]
    edges = [
        (u, v)
        for u in range(n_bipartite)
        for v in range(u + 1, n_bipartite)
        if sides[u] != sides[v] and rng.random() < bipartite_p
    ]
    cycle_part = gen_disjoint_odd_cycles(lengths)
    edges.extend((n_bipartite + u, n_bipartite + v) for u, v in cycle_part.edges())
    n = n_bipartite + cycle_part.n
    if attach_edges > 0 and (n_bipartite == 0 or cycle_part.n == 0):
        raise GenerationError("cross edges need both a bipartite part and cycles")
    threshold = min(lengths) if lengths else None
    graph = Graph(n, edges)
    for _ in range(attach_edges):
        for attempt in range(ATTACH_RETRY_BUDGET + 1):
            if attempt == ATTACH_RETRY_BUDGET:
                raise GenerationError(
                    f"no admissible cross edge found in {ATTACH_RETRY_BUDGET} tries"
                )
            u = rng.randrange(n_bipartite)
            v = n_bipartite + rng.randrange(cycle_part.n)
            if graph.has_edge(u, v):
                continue
            candidate = Graph(n, [*graph.edges(), (u, v)])
            if threshold is not None and odd_girth(candidate) < threshold:
                continue
            graph = candidate
            break
    return graph


def find_k33(graph: Graph):
    """First pair of disjoint triples with all nine cross edges, else None.

    Scans triples in lexicographic order and looks for three common
    neighbors; a triple's common neighbors are automatically disjoint from
    it, so any complete bipartite K_{3,3} is found from one of its sides.
    """
    n = graph.n
    for a in range(n):
        for b in range(a + 1, n):
            common_ab = graph.bits[a] & graph.bits[b]
            for c in range(b + 1, n):
                common = common_ab & graph.bits[c]
                if common.bit_count() < 3:
                    continue
                other = []
                m = common
                while len(other) < 3:
                    low = m & -m
                    m ^= low
                    other.append(low.bit_length() - 1)
                return ((a, b, c), tuple(other))
    return None


@dataclass(frozen=True)
class ConstructionReport:
    """Everything produced by one run of the lower-bound construction."""

    k: int
    n: int
    sampled: Graph
    pruned: Graph
    result: Graph
    deleted_k33_count: int
    alpha_h: int | None


def pruned_complement_construction(k: int, seed: int) -> ConstructionReport:
    """Sample G(k^2/2, 1/k), delete K_{3,3} blocks greedily, complement.

    Each deletion removes the nine cross edges of the first K_{3,3} found,
    so the deleted set is a maximal union of edge-disjoint nine-edge blocks
    and the pruned graph contains no K_{3,3} between disjoint triples.
    alpha_h is filled with the exact independence number of the result when
    it is small enough to compute, else None. k must be even and >= 4.
    """
    if not isinstance(k, int) or k < 4 or k % 2 != 0:
        raise ValueError(f"k must be an even integer >= 4, got {k!r}")
    n = k * k // 2
    sampled = gnp(n, 1.0 / k, seed)
    edges = set(sampled.edges())
    deleted = 0
    current = sampled
    while True:
        found = find_k33(current)
        if found is None:
            break
        side_a, side_b = found
        for u in side_a:
            for v in side_b:
                edges.discard((u, v) if u < v else (v, u))
        deleted += 1
        current = Graph(n, sorted(edges))
    pruned = current
    result = complement(pruned)
    alpha_h = None
    if result.n <= _ALPHA_ORACLE_CEILING:
        from .oracles import exact_mis

        alpha_h = len(exact_mis(result, limit=result.n))
    return ConstructionReport(k, n, sampled, pruned, result, deleted, alpha_h)
