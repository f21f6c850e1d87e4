"""Exact maximum-weight independent sets in bipartite graphs.

Classic minimum-vertex-cover duality: a flow network with one side of the
bipartition attached to the source and the other to the sink (arc capacity =
vertex weight, crossing arcs effectively infinite) has maximum flow equal to
the minimum weight of a vertex cover; the complement of the cover read off a
minimum cut is a maximum-weight independent set.
"""

from __future__ import annotations

from collections import deque

from .errors import PreconditionError
from .graph import Graph, VertexWeights, two_coloring


class _Dinic:
    def __init__(self, node_count: int) -> None:
        self.n = node_count
        self.head: list[list[int]] = [[] for _ in range(node_count)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, capacity: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(capacity)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and level[v] == -1:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] != -1 else None

    def _push(self, u: int, t: int, limit: int, level: list[int], it: list[int]) -> int:
        if u == t:
            return limit
        while it[u] < len(self.head[u]):
            e = self.head[u][it[u]]
            v = self.to[e]
            if self.cap[e] > 0 and level[v] == level[u] + 1:
                pushed = self._push(v, t, min(limit, self.cap[e]), level, it)
                if pushed:
                    self.cap[e] -= pushed
                    self.cap[e ^ 1] += pushed
                    return pushed
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                pushed = self._push(s, t, 1 << 62, level, it)
                if not pushed:
                    break
                total += pushed

    def residual_reachable(self, s: int) -> list[bool]:
        seen = [False] * self.n
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.head[u]:
                v = self.to[e]
                if self.cap[e] > 0 and not seen[v]:
                    seen[v] = True
                    queue.append(v)
        return seen


def max_weight_independent_set_bipartite(
    graph: Graph, weights: VertexWeights | None = None
) -> frozenset[int]:
    """Maximum-weight independent set of a bipartite graph.

    Raises PreconditionError (with an odd-cycle witness) if the graph is not
    bipartite. The result is deterministic: the bipartition comes from
    two_coloring and the minimum cut is read off the final residual network.
    """
    if weights is None:
        weights = VertexWeights.unit(graph.n)
    weights.check_domain(graph)
    result = two_coloring(graph)
    if result.coloring is None:
        raise PreconditionError("graph is not bipartite", witness=result.odd_walk)
    side = result.coloring.assignment
    n = graph.n
    source, sink = n, n + 1
    infinite = weights.total() + 1
    net = _Dinic(n + 2)
    for v in range(n):
        if side[v] == 0:
            net.add_edge(source, v, weights[v])
        else:
            net.add_edge(v, sink, weights[v])
    for u, v in graph.edges():
        a, b = (u, v) if side[u] == 0 else (v, u)
        net.add_edge(a, b, infinite)
    flow = net.max_flow(source, sink)
    reach = net.residual_reachable(source)
    picked = frozenset(
        v for v in range(n) if (side[v] == 0) == reach[v]
    )
    if weights.weight_of(picked) + flow != weights.total():
        raise AssertionError("min-cut complement does not certify optimality")
    return picked
