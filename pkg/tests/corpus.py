"""Deterministic corpora and naive reference implementations for the tests.

Every generator here is seeded, so repeated calls (and repeated test runs)
produce identical instances. The ``ref_*`` functions are deliberately slow,
obviously-correct re-implementations: they validate the package's fast
oracles on small graphs before those oracles anchor the larger corpora.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from ocpack import (
    Graph,
    OddCycle,
    VertexWeights,
    bfs_distances,
    gen_high_odd_girth,
    gnp,
    odd_girth,
)

# --------------------------------------------------------------------------
# Naive reference implementations (independent of the package's algorithms).
# --------------------------------------------------------------------------


def ref_is_independent(graph: Graph, vertex_set) -> bool:
    vs = list(vertex_set)
    return all(not graph.has_edge(u, v) for u, v in combinations(vs, 2))


def ref_alpha_w(graph: Graph, weights: VertexWeights | None = None) -> int:
    """Maximum independent-set weight by full subset enumeration (n <= 16)."""
    n = graph.n
    if n > 16:
        raise ValueError("reference enumeration is capped at 16 vertices")
    wv = weights.values if weights is not None else (1,) * n
    best = 0
    for mask in range(1 << n):
        total = 0
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if graph.bits[v] & mask:
                total = -1
                break
            total += wv[v]
            rest ^= low
        if total > best:
            best = total
    return best


def ref_odd_girth(graph: Graph) -> int | None:
    """Odd girth via BFS on the bipartite double cover; None when bipartite.

    The shortest odd closed walk through s has length dist((s, even) ->
    (s, odd)) in the parity-layered graph, and the shortest odd closed walk
    of a graph is always a shortest odd cycle.
    """
    best: int | None = None
    for s in range(graph.n):
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue:
            v, parity = queue.popleft()
            d = dist[(v, parity)]
            if best is not None and d >= best:
                continue
            for w in graph.adj[v]:
                state = (w, parity ^ 1)
                if state not in dist:
                    dist[state] = d + 1
                    queue.append(state)
        here = dist.get((s, 1))
        if here is not None and (best is None or here < best):
            best = here
    return best


def ref_girth(graph: Graph) -> int | None:
    """Girth via per-edge deletion: cycle through uv = dist_{G-uv}(u, v) + 1."""
    best: int | None = None
    for u, v in graph.edges():
        dist = [-1] * graph.n
        dist[u] = 0
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in graph.adj[x]:
                if (x, y) in ((u, v), (v, u)):
                    continue
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if dist[v] != -1:
            cycle_len = dist[v] + 1
            if best is None or cycle_len < best:
                best = cycle_len
    return best


def ref_iocp(graph: Graph) -> int:
    """Induced odd cycle packing number by subset enumeration (n <= 14)."""
    n = graph.n
    if n > 14:
        raise ValueError("reference iocp is capped at 14 vertices")
    best = 0
    for mask in range(1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        if len(members) < 3 or len(members) <= 3 * best:
            continue
        if any((graph.bits[v] & mask).bit_count() != 2 for v in members):
            continue
        # 2-regular induced subgraph: components are cycles; count odd ones,
        # and reject the subset if any component is even.
        seen: set[int] = set()
        count = 0
        all_odd = True
        for v in members:
            if v in seen:
                continue
            size = 0
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                size += 1
                for y in graph.adj[x]:
                    if mask >> y & 1 and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if size % 2 == 0:
                all_odd = False
                break
            count += 1
        if all_odd and count > best:
            best = count
    return best


def ref_chromatic(graph: Graph) -> int:
    """Chromatic number by plain backtracking (n <= 12)."""
    n = graph.n
    if n > 12:
        raise ValueError("reference chromatic is capped at 12 vertices")
    if n == 0:
        return 0
    if graph.m == 0:
        return 1
    colors = [-1] * n

    def place(v: int, k: int) -> bool:
        if v == n:
            return True
        for c in range(k):
            if all(colors[w] != c for w in graph.adj[v]):
                colors[v] = c
                if place(v + 1, k):
                    return True
                colors[v] = -1
        return False

    for k in range(2, n + 1):
        if place(0, k):
            return k
    raise AssertionError("every graph is n-colorable")


def ref_proper(graph: Graph, assignment) -> bool:
    return all(assignment[u] != assignment[v] for u, v in graph.edges())


# --------------------------------------------------------------------------
# Seeded corpora.
# --------------------------------------------------------------------------


def gnp_corpus(count: int, n_lo: int, n_hi: int, seed: int, p_lo: float = 0.1, p_hi: float = 0.6) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        out.append(gnp(n, rng.uniform(p_lo, p_hi), rng.getrandbits(63)))
    return out


def weights_for(graph: Graph, seed: int, lo: int = 1, hi: int = 5) -> VertexWeights:
    rng = random.Random(seed)
    return VertexWeights(tuple(rng.randint(lo, hi) for _ in range(graph.n)))


def random_bipartite(n: int, p: float, seed: int) -> Graph:
    """Random graph with edges only across a random 2-side split."""
    rng = random.Random(seed)
    side = [rng.randrange(2) for _ in range(n)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if side[u] != side[v] and rng.random() < p
    ]
    return Graph(n, edges)


def bounded_iocp_corpus(count: int, n_lo: int, n_hi: int, k_max: int, seed: int) -> list[tuple[Graph, int]]:
    """(graph, exact iocp) pairs with iocp <= k_max, by rejection sampling."""
    from ocpack import exact_iocp

    rng = random.Random(seed)
    out: list[tuple[Graph, int]] = []
    while len(out) < count:
        n = rng.randint(n_lo, n_hi)
        g = gnp(n, rng.uniform(0.1, 0.5), rng.getrandbits(63))
        k = exact_iocp(g, limit=n)
        if k <= k_max:
            out.append((g, k))
    return out


def cycle_plus_shell(seed: int) -> tuple[Graph, OddCycle, int, int]:
    """A graph built around a planted shortest odd cycle, plus shield inputs.

    Returns (graph, cycle, anchor, radius) satisfying: the cycle is a
    shortest odd cycle of the graph, every vertex is within ``radius`` of the
    cycle, and 2 * radius <= length - 1. The shell is grown as trees hanging
    off the cycle (depth <= radius) plus a few shell-shell edges that are
    kept only if the odd girth stays equal to the planted length; both kinds
    of addition keep every distance-to-cycle within ``radius``. n <= 60.
    """
    rng = random.Random(seed)
    length = rng.choice([5, 7, 9, 11, 13, 15, 17, 19, 21])
    radius = rng.randint(1, min((length - 1) // 2, 4))
    edges = [(i, (i + 1) % length) for i in range(length)]
    depth = [0] * length
    n = length
    for _ in range(rng.randint(0, 60 - length)):
        candidates = [v for v in range(n) if depth[v] < radius]
        parent = rng.choice(candidates)
        edges.append((parent, n))
        depth.append(depth[parent] + 1)
        n += 1
    graph = Graph(n, edges)
    shell = list(range(length, n))
    for _ in range(rng.randint(0, 6)):
        if len(shell) < 2:
            break
        u, v = rng.sample(shell, 2)
        if graph.has_edge(u, v):
            continue
        candidate = Graph(n, [*graph.edges(), (u, v)])
        if odd_girth(candidate) == length:
            graph = candidate
    cycle = OddCycle(tuple(range(length)))
    anchor = rng.randrange(length)
    assert odd_girth(graph) == length
    assert all(0 <= d <= radius for d in bfs_distances(graph, range(length)))
    return graph, cycle, anchor, radius


def high_odd_girth_instance(seed: int) -> tuple[Graph, VertexWeights]:
    """Odd girth >= 53 instance with n <= 64 and weights in 1..5.

    One planted odd cycle of length 53..63 plus a small random bipartite part
    attached through odd-girth-preserving cross edges; iocp <= 1 follows
    structurally (any odd cycle meets the planted one's component, and two
    disjoint ones would need more vertices than the graph has).
    """
    rng = random.Random(seed)
    length = 53 + 2 * rng.randrange(6)
    n_extra = rng.randrange(0, 64 - length + 1)
    attach = rng.randrange(0, n_extra + 1) if n_extra else 0
    g = gen_high_odd_girth(n_extra, [length], attach, seed=rng.getrandbits(63))
    return g, weights_for(g, rng.getrandbits(63))
