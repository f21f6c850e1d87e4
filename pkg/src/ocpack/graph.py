"""Immutable graph core: distances, bipartiteness, odd cycles, shields.

Vertices are integers 0..n-1. Graphs are simple (no loops, no parallel edges)
and immutable after construction, so they are safe to share between solver
branches. Adjacency is kept both as sorted tuples (for deterministic
iteration) and as integer bitsets (for the kernels and set algebra).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import backend
from .errors import PreconditionError, VerificationError

UNREACHABLE = -1


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "m", "adj", "bits", "_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in neighbor_sets[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
            m += 1
        self.n = n
        self.m = m
        self.adj = tuple(tuple(sorted(s)) for s in neighbor_sets)
        bits = []
        for s in neighbor_sets:
            word = 0
            for w in s:
                word |= 1 << w
            bits.append(word)
        self.bits = tuple(bits)
        self._csr = None

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def csr(self):
        """Adjacency in compressed sparse row form (int32 numpy arrays)."""
        if self._csr is None:
            import numpy as np

            indptr = np.zeros(self.n + 1, dtype=np.int32)
            for v in range(self.n):
                indptr[v + 1] = indptr[v] + len(self.adj[v])
            indices = np.fromiter(
                (w for row in self.adj for w in row),
                dtype=np.int32,
                count=int(indptr[-1]),
            )
            self._csr = (indptr, indices)
        return self._csr

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexWeights:
    """Positive integer weights indexed by vertex."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, w in enumerate(self.values):
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise ValueError(f"weight of vertex {i} must be an integer >= 1, got {w!r}")

    @classmethod
    def unit(cls, n: int) -> "VertexWeights":
        return cls((1,) * n)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def total(self) -> int:
        return sum(self.values)

    def weight_of(self, vertex_set: Iterable[int]) -> int:
        return sum(self.values[v] for v in vertex_set)

    def check_domain(self, graph: Graph) -> None:
        if len(self.values) != graph.n:
            raise ValueError(
                f"weights cover {len(self.values)} vertices, graph has {graph.n}"
            )


@dataclass(frozen=True)
class OddCycle:
    """An odd cycle given by its vertex sequence (consecutive = adjacent)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.vertices)
        if k < 3 or k % 2 == 0:
            raise ValueError(f"odd cycle needs an odd number >= 3 of vertices, got {k}")
        if len(set(self.vertices)) != k:
            raise ValueError("cycle vertices must be distinct")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def verify(self, graph: Graph) -> None:
        """Raise ValueError unless this is a cycle of ``graph``."""
        k = self.length
        for i, u in enumerate(self.vertices):
            if not 0 <= u < graph.n:
                raise ValueError(f"cycle vertex {u} out of range")
            v = self.vertices[(i + 1) % k]
            if not graph.has_edge(u, v):
                raise ValueError(f"cycle step ({u}, {v}) is not an edge")

    def is_induced_in(self, graph: Graph) -> bool:
        """True iff the cycle has no chords in ``graph``."""
        k = self.length
        members = set(self.vertices)
        for i, u in enumerate(self.vertices):
            allowed = {self.vertices[i - 1], self.vertices[(i + 1) % k]}
            for w in graph.adj[u]:
                if w in members and w not in allowed:
                    return False
        return True


@dataclass(frozen=True)
class ShieldSpec:
    """A shield request: cycle, anchor vertex on it, and a BFS radius."""

    cycle: OddCycle
    anchor: int
    radius: int


@dataclass(frozen=True)
class Coloring:
    """A total color assignment with its number of distinct colors."""

    assignment: tuple[int, ...]
    color_count: int

    def __post_init__(self) -> None:
        distinct = len(set(self.assignment))
        if distinct != self.color_count:
            raise ValueError(
                f"color_count {self.color_count} != {distinct} distinct colors"
            )

    @classmethod
    def from_assignment(cls, assignment: Sequence[int]) -> "Coloring":
        values = tuple(assignment)
        return cls(values, len(set(values)))


class TwoColoringResult(NamedTuple):
    """Either a proper 2-coloring or an odd-cycle witness (never both)."""

    coloring: Coloring | None
    odd_walk: tuple[int, ...] | None


class InducedSubgraph(NamedTuple):
    graph: Graph
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]


def bfs_distances(graph: Graph, sources: Iterable[int]) -> list[int]:
    """BFS distances from a non-empty source set; UNREACHABLE (-1) elsewhere."""
    srcs = list(sources)
    if not srcs:
        raise ValueError("source set must be non-empty")
    for s in srcs:
        if not 0 <= s < graph.n:
            raise ValueError(f"source {s} out of range")
    return backend.bfs(graph, srcs)


def two_coloring(graph: Graph) -> TwoColoringResult:
    """Proper 2-coloring if bipartite, otherwise an odd closed walk witness.

    The witness is a simple odd cycle given as a vertex sequence (consecutive
    entries and the wrap-around pair are adjacent). Components are colored
    independently; the lowest-indexed vertex of each component gets color 0.
    """
    n = graph.n
    color = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            cu = color[u]
            for v in graph.adj[u]:
                if color[v] == -1:
                    color[v] = cu ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == cu:
                    return TwoColoringResult(None, _odd_cycle_witness(parent, u, v))
    return TwoColoringResult(Coloring.from_assignment(color), None)


def _odd_cycle_witness(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    ancestors = {}
    c = u
    depth = 0
    while c != -1:
        ancestors[c] = depth
        depth += 1
        c = parent[c]
    c = v
    path_v = []
    while c not in ancestors:
        path_v.append(c)
        c = parent[c]
    meet = c
    path_u = [u]
    c = u
    while c != meet:
        c = parent[c]
        path_u.append(c)
    # path_u runs u..meet, path_v runs v..(child of meet); their concatenation
    # u..meet followed by reversed(path_v) = meet-side..v closes on the edge vu.
    walk = path_u + list(reversed(path_v))
    return tuple(walk)


def shortest_odd_cycle(graph: Graph) -> OddCycle | None:
    """A shortest odd cycle of the graph, or None if bipartite.

    The result is always induced and geodesic (any chord or shortcut would
    yield a shorter odd cycle) and is returned in canonical orientation:
    starting at its smallest vertex, in the direction of the smaller second
    vertex.
    """
    raw = backend.odd_cycle(graph)
    if raw is None:
        return None
    cycle = OddCycle(tuple(raw))
    cycle.verify(graph)
    if not cycle.is_induced_in(graph):
        raise VerificationError("shortest odd cycle candidate is not induced")
    return cycle


def odd_girth(graph: Graph) -> int | float:
    """Length of a shortest odd cycle; math.inf for bipartite graphs."""
    cycle = shortest_odd_cycle(graph)
    return math.inf if cycle is None else cycle.length


def girth(graph: Graph) -> int | float:
    """Length of a shortest cycle of any parity; math.inf for forests.

    Per-root BFS: every non-tree edge xy closes a walk of length
    dist(x) + dist(y) + 1 containing a cycle no longer than itself, and for a
    root on a shortest cycle the opposite edge attains the girth exactly.
    """
    n = graph.n
    best = math.inf
    dist = [0] * n
    parent = [0] * n
    for root in range(n):
        for i in range(n):
            dist[i] = -1
            parent[i] = -1
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for v in graph.adj[u]:
                if dist[v] == -1:
                    dist[v] = du
                    parent[v] = u
                    queue.append(v)
        for x in range(n):
            if dist[x] < 0:
                continue
            for y in graph.adj[x]:
                if y <= x or dist[y] < 0:
                    continue
                if parent[x] == y or parent[y] == x:
                    continue
                candidate = dist[x] + dist[y] + 1
                if candidate < best:
                    best = candidate
    return best


def neighborhood(graph: Graph, vertex_set: Iterable[int]) -> frozenset[int]:
    """Open neighborhood: vertices outside the set with a neighbor inside."""
    members = set(vertex_set)
    for v in members:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range")
    out: set[int] = set()
    for v in members:
        out.update(graph.adj[v])
    return frozenset(out - members)


def closed_neighborhood(graph: Graph, vertex_set: Iterable[int]) -> frozenset[int]:
    members = frozenset(vertex_set)
    return frozenset(members | neighborhood(graph, members))


def induced_subgraph(graph: Graph, vertex_set: Iterable[int]) -> InducedSubgraph:
    """Induced subgraph with the old->new and new->old index maps.

    Kept vertices are relabeled 0..k-1 in increasing original order, so the
    construction is deterministic for any input order.
    """
    keep = sorted(set(vertex_set))
    for v in keep:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range")
    old_to_new = {v: i for i, v in enumerate(keep)}
    edges = []
    for i, v in enumerate(keep):
        for w in graph.adj[v]:
            j = old_to_new.get(w)
            if j is not None and i < j:
                edges.append((i, j))
    return InducedSubgraph(Graph(len(keep), edges), old_to_new, tuple(keep))


def complement(graph: Graph) -> Graph:
    """Complement graph on the same vertex set."""
    n = graph.n
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not graph.bits[u] >> v & 1
    ]
    return Graph(n, edges)


def shield_set(graph: Graph, spec: ShieldSpec) -> frozenset[int]:
    """Vertices within ``spec.radius`` of the cycle arc around the anchor.

    The arc consists of the cycle vertices at cyclic distance at most
    ``radius`` from the anchor; the shield is everything within BFS distance
    ``radius`` of that arc. When the cycle is a shortest odd cycle, every
    vertex of the graph is within ``radius`` of the cycle, and
    ``radius <= (length - 1) / 2``, removing the shield leaves a bipartite
    graph.
    """
    cycle = spec.cycle
    cycle.verify(graph)
    if spec.anchor not in cycle.vertices:
        raise ValueError(f"anchor {spec.anchor} is not on the cycle")
    if spec.radius < 0:
        raise ValueError("radius must be non-negative")
    if 2 * spec.radius > cycle.length - 1:
        raise PreconditionError(
            f"radius {spec.radius} too large for odd girth {cycle.length}"
        )
    pos = cycle.vertices.index(spec.anchor)
    length = cycle.length
    arc = [cycle.vertices[(pos + d) % length] for d in range(-spec.radius, spec.radius + 1)]
    dist = bfs_distances(graph, arc)
    return frozenset(v for v in range(graph.n) if 0 <= dist[v] <= spec.radius)
