"""Quasi-polynomial multiplicative approximation for bounded-iocp graphs.

qptas_solve returns an independent set of size >= (1 - k/p) alpha(G) with
probability >= 1/2 when iocp(G) <= k (paper-mode parameters). Each call
takes the largest of three branch families:

  (a) the amplified additive engine (eptas.amplify) with accuracy
      t = (4 + 10k)p and one repetition per vertex (paper mode; practical
      mode caps repetitions at 32);
  (b) for every triangle T of a greedy maximal triangle packing, the
      recursion on G - N[T] with budget k - 1, plus the lowest-indexed
      vertex of T — removing N[T] removes every odd cycle through T, and
      alpha(G - N(T)) = alpha(G - N[T]) + 1;
  (c) for every vertex of degree >= n/(18p), the recursion on G - N(v)
      with the budget unchanged.

Every call either decreases k or removes at least n/(18p) vertices, which
bounds the recursion depth by O(k + p log n). Base cases: k = 0 solves
exactly by flow (falling back to a greedy set if the caller's iocp bound
was wrong), and n < 12 switches to the exact branch-and-bound oracle.

trichotomy_witness is the oracle-backed checker behind branch correctness:
every graph has a large independent set, a good triangle, or a removable
high-degree neighborhood.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from .coloring import maximal_triangle_packing
from .eptas import MODES, SolveParams, amplify
from .errors import PreconditionError, VerificationError
from .flow import max_weight_independent_set_bipartite
from .graph import (
    Graph,
    closed_neighborhood,
    induced_subgraph,
    neighborhood,
    two_coloring,
)
from .highgirth import greedy_independent_set
from .oracles import exact_iocp, exact_mis
from .seeding import check_seed, derive_seed

EXACT_CUTOFF = 12
PRACTICAL_REPETITION_CAP = 32


@dataclass(frozen=True)
class QptasParams:
    """Parameters of a seeded quasi-polynomial run.

    k bounds iocp(G), p is the precision divisor of the multiplicative
    guarantee (1 - k/p). The embedded additive-engine parameters use
    accuracy t = (4 + 10k)p and, in practical mode, the caller-supplied
    sample and shrink overrides.
    """

    k: int
    p: int
    mode: str = "paper"
    r_override: int | None = None
    d_override: int | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a non-negative integer, got {self.k!r}")
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"p must be an integer >= 1, got {self.p!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        check_seed(self.seed)
        if self.k > 0:
            self.eptas_template  # validates the overrides for the mode

    @property
    def eptas_template(self) -> SolveParams:
        """The embedded additive-engine parameters at the top-level budget."""
        return self.inner_params(max(self.k, 1), 1, self.seed)

    def inner_params(self, k: int, n: int, seed: int) -> SolveParams:
        """Branch (a) parameters at the current budget and subgraph size."""
        if self.mode == "paper":
            repetitions = max(n, 1)
        else:
            repetitions = max(min(n, PRACTICAL_REPETITION_CAP), 1)
        return SolveParams(
            k=k,
            t=(4 + 10 * k) * self.p,
            mode=self.mode,
            r_override=self.r_override,
            d_override=self.d_override,
            seed=seed,
            repetitions=repetitions,
        )


class TrichotomyWitness(NamedTuple):
    """Which of the three structural outcomes a graph satisfies.

    tag is one of "large_independent_set", "good_triangle" (with the
    triangle), "high_degree_vertex" (with the vertex).
    """

    tag: str
    triangle: tuple[int, int, int] | None = None
    vertex: int | None = None


def trichotomy_witness(graph: Graph, k: int, p: int, limit: int = EXACT_CUTOFF) -> TrichotomyWitness:
    """Exhaustively verified branch trichotomy (small graphs only).

    Returns the first satisfied outcome: (i) alpha(G) >= n/(4 + 10 iocp(G));
    (ii) some triangle T of the greedy maximal triangle packing has
    alpha(G - N(T)) >= (1 - 1/p) alpha(G); (iii) some vertex v of degree
    >= n/(18p) has alpha(G - N(v)) = alpha(G). All quantities come from
    exact oracles, so n must stay at or below ``limit``.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if p < 1:
        raise ValueError(f"p must be at least 1, got {p}")
    if graph.n > limit:
        raise PreconditionError(
            f"trichotomy check needs n <= {limit}, got {graph.n}"
        )
    alpha = len(exact_mis(graph))
    iocp = exact_iocp(graph)
    if alpha * (4 + 10 * iocp) >= graph.n:
        return TrichotomyWitness("large_independent_set")
    for triangle in maximal_triangle_packing(graph).triangles:
        kept = sorted(set(range(graph.n)) - neighborhood(graph, triangle))
        sub, _, _ = induced_subgraph(graph, kept)
        if p * len(exact_mis(sub)) >= (p - 1) * alpha:
            return TrichotomyWitness("good_triangle", triangle=triangle)
    for v in range(graph.n):
        if 18 * p * graph.degree(v) < graph.n:
            continue
        kept = sorted(set(range(graph.n)) - neighborhood(graph, [v]))
        sub, _, _ = induced_subgraph(graph, kept)
        if len(exact_mis(sub)) == alpha:
            return TrichotomyWitness("high_degree_vertex", vertex=v)
    raise VerificationError(
        "no trichotomy outcome holds; the structural guarantee is violated"
    )


class _Engine:
    def __init__(self, graph: Graph, params: QptasParams) -> None:
        self.graph = graph
        self.params = params
        self.memo: dict[tuple[frozenset[int], int], frozenset[int]] = {}

    def run(self, seed: int) -> frozenset[int]:
        ids = tuple(range(self.graph.n))
        return self.solve(self.graph, ids, self.params.k, seed)

    def solve(self, graph: Graph, orig_ids: tuple[int, ...], k: int, seed: int) -> frozenset[int]:
        key = (frozenset(orig_ids), k)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        result = self._compute(graph, orig_ids, k, seed)
        self.memo[key] = result
        return result

    def _compute(self, graph: Graph, orig_ids: tuple[int, ...], k: int, seed: int) -> frozenset[int]:
        n_here = graph.n
        if k == 0:
            if two_coloring(graph).coloring is not None:
                local = max_weight_independent_set_bipartite(graph)
            else:
                local = greedy_independent_set(graph)
            return frozenset(orig_ids[v] for v in local)
        if n_here < EXACT_CUTOFF:
            return frozenset(orig_ids[v] for v in exact_mis(graph))
        p = self.params.p
        inner = self.params.inner_params(k, n_here, derive_seed(seed, "eptas"))
        best = frozenset(orig_ids[v] for v in amplify(graph, inner))
        for index, triangle in enumerate(maximal_triangle_packing(graph).triangles):
            kept = sorted(set(range(n_here)) - closed_neighborhood(graph, triangle))
            sub, _, local_ids = induced_subgraph(graph, kept)
            child_ids = tuple(orig_ids[v] for v in local_ids)
            child = self.solve(sub, child_ids, k - 1, derive_seed(seed, "triangle", index))
            candidate = child | {orig_ids[min(triangle)]}
            if len(candidate) > len(best):
                best = candidate
        for v in range(n_here):
            degree = graph.degree(v)
            if 18 * p * degree < n_here:
                continue
            assert 18 * p * degree >= n_here, "recursion measure violated"
            kept = sorted(set(range(n_here)) - neighborhood(graph, [v]))
            sub, _, local_ids = induced_subgraph(graph, kept)
            child_ids = tuple(orig_ids[v2] for v2 in local_ids)
            child = self.solve(sub, child_ids, k, derive_seed(seed, "degree", v))
            if len(child) > len(best):
                best = child
        return best


def qptas_solve(graph: Graph, params: QptasParams, rng: random.Random | None = None) -> frozenset[int]:
    """One seeded quasi-polynomial run; see the module docstring.

    Driven by params.seed unless an explicit rng is supplied, in which case
    one 64-bit seed is drawn from it. The output is always independent.
    """
    seed = params.seed if rng is None else rng.getrandbits(64)
    if params.k == 0:
        if two_coloring(graph).coloring is not None:
            return max_weight_independent_set_bipartite(graph)
        return greedy_independent_set(graph)
    return _Engine(graph, params).run(seed)
