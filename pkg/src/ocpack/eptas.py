"""Randomized additive-error independent set engine.

For a graph with iocp(G) <= k and an accuracy parameter t, a seeded run
returns an independent set of size at least alpha(G) - n/t with probability
at least 1/2 (paper mode); amplify() repeats the run to push the failure
probability down. Each recursion node decomposes the current graph G' with
budget k' into

  - I: the solution of the odd-cycle-free part after removing a maximal
    packing of short odd cycles (exact when G' is bipartite),
  - one branch per packed cycle C_i: recurse on G' minus the closed
    neighborhood of C_i with budget k' - 1, then add floor(|C_i| / 2)
    alternating vertices of C_i,
  - r branches for sampled vertices u_j: recurse on G' minus N(u_j) with the
    same budget, but only when the branch shrinks the graph enough.

The largest candidate wins, ties resolved in the fixed order I, I_1..I_m,
J_1..J_r. "practical" mode replaces the astronomically conservative sample
size and shrink factor with user overrides; "paper" mode computes them
exactly as analyzed.

Engine-level accelerations (output remains deterministic given the seed):
states are memoized on (vertex set, k') within one top-level call, and a
bipartite current graph returns its exact flow answer immediately, which is
identical to what the branch comparison would select.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import PreconditionError
from .flow import max_weight_independent_set_bipartite
from .graph import Graph, OddCycle, induced_subgraph, neighborhood, two_coloring
from .highgirth import PackingResult, greedy_independent_set, maximal_short_odd_packing, no_short_odd_solve
from .seeding import check_seed, derive_seed

SHRINK_DENOMINATOR = 81920

MODES = ("paper", "practical")


def q_bound(n: int, r: int, s) -> float:
    """Probability that r uniform distinct vertices all avoid a fixed set of
    ceil(s) vertices: comb(n - ceil(s), r) / comb(n, r), computed exactly."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if not isinstance(r, int) or not 0 <= r <= n:
        raise ValueError(f"r must be an integer in 0..{n}, got {r!r}")
    if not 0 <= s <= n:
        raise ValueError(f"s must lie in 0..{n}, got {s!r}")
    blocked = math.ceil(s)
    if n - blocked < r:
        return 0.0
    return float(Fraction(math.comb(n - blocked, r), math.comb(n, r)))


def _paper_d(p: int) -> int:
    """Smallest d >= 1 with (1 - 1/(81920 p^6))^d < 1/p."""
    if p < 1:
        raise ValueError("p must be positive")
    if p == 1:
        return 1
    factor = SHRINK_DENOMINATOR * p**6
    per_step = -math.log1p(-1.0 / factor)
    return math.floor(math.log(p) / per_step) + 1


def _paper_r(current_n: int, s: int, d: int) -> int:
    """Smallest r with q_bound(current_n, r, s) <= 1/(2d), capped at current_n.

    The comparison is done in exact integer arithmetic:
    2 d comb(n - s, r) <= comb(n, r).
    """
    n = current_n
    if n - s < 0:
        return 1

    def small_enough(r: int) -> bool:
        if n - s < r:
            return True
        return 2 * d * math.comb(n - s, r) <= math.comb(n, r)

    lo, hi = 0, n
    if small_enough(lo):
        return max(1, lo)
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if small_enough(mid):
            hi = mid
        else:
            lo = mid
    return max(1, hi)


@dataclass(frozen=True)
class SolveParams:
    """Parameters of a seeded engine run.

    k is the iocp budget, t the accuracy parameter (additive error n/t). In
    practical mode r_override bounds the per-node sample size and d_override
    sets the shrink factor 1 - 1/d_override; paper mode derives both from the
    analysis. repetitions is consumed by amplify().
    """

    k: int
    t: int = 1
    mode: str = "paper"
    r_override: int | None = None
    d_override: int | None = None
    seed: int = 0
    repetitions: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a non-negative integer, got {self.k!r}")
        if not isinstance(self.t, int) or self.t < 1:
            raise ValueError(f"t must be an integer >= 1, got {self.t!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "practical":
            if self.r_override is None or self.r_override < 1:
                raise ValueError("practical mode needs r_override >= 1")
            if self.d_override is None or self.d_override < 2:
                raise ValueError("practical mode needs d_override >= 2")
        check_seed(self.seed)
        if not isinstance(self.repetitions, int) or self.repetitions < 1:
            raise ValueError("repetitions must be an integer >= 1")

    @property
    def p(self) -> int:
        return self.k * self.t

    def shrink_keeps(self, child_n: int, parent_n: int) -> bool:
        """Whether a shrink branch of size child_n is small enough to enter."""
        if self.mode == "practical":
            d = self.d_override
            return child_n * d < parent_n * (d - 1)
        factor = SHRINK_DENOMINATOR * self.p**6
        return child_n * factor < parent_n * (factor - 1)

    def sample_size(self, current_n: int, original_n: int) -> int:
        if current_n < 1:
            raise ValueError("sample size undefined for an empty graph")
        if self.mode == "practical":
            return min(self.r_override, current_n)
        p = self.p
        s = max(1, math.ceil(original_n / (SHRINK_DENOMINATOR * p**7)))
        return min(_paper_r(current_n, s, _paper_d(p)), current_n)


class CycleBranch(NamedTuple):
    """One packed cycle: the surviving vertex set once the cycle's outside
    neighbors are removed, and the cycle itself (a component of that set)."""

    vertices: frozenset[int]
    cycle: OddCycle


class ShrinkBranch(NamedTuple):
    sampled_vertex: int
    vertices: frozenset[int]


@dataclass(frozen=True)
class DecompositionResult:
    independent: frozenset[int]
    cycle_branches: tuple[CycleBranch, ...]
    shrink_branches: tuple[ShrinkBranch, ...]
    packing: PackingResult


def decompose(graph: Graph, k: int, r: int, p: int, rng: random.Random) -> DecompositionResult:
    """One decomposition step of the engine.

    Packs short odd cycles (length < 4p(16p - 3)) until none remain, solves
    the high-odd-girth residual with the recursive peeling solver (exact if
    bipartite), and assembles the cycle and sampled-vertex branches. The
    trichotomy: if iocp(G) <= k <= p, then either |I| >= (1 - k/p) alpha(G),
    or some cycle branch satisfies alpha(H_i) >= (1 - 1/p) alpha(G), or some
    vertex v of degree >= (k / (81920 p^6)) n has alpha(G - N(v)) = alpha(G).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if p < k:
        raise ValueError(f"p must be >= k, got p={p}, k={k}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if graph.n < r:
        raise PreconditionError(f"cannot sample {r} distinct vertices from {graph.n}")
    girth_bound = 4 * p * (16 * p - 3)
    packing = maximal_short_odd_packing(graph, girth_bound)
    residual_graph, _, residual_ids = induced_subgraph(graph, packing.residual)
    independent_local = no_short_odd_solve(residual_graph, None, k, 2 * p)
    independent = frozenset(residual_ids[v] for v in independent_local)
    cycle_branches = []
    for cycle in packing.cycles:
        removed = neighborhood(graph, cycle.vertices)
        kept = frozenset(range(graph.n)) - removed
        cycle_branches.append(CycleBranch(kept, cycle))
    sampled = rng.sample(range(graph.n), r)
    shrink_branches = []
    for u in sampled:
        kept = frozenset(range(graph.n)) - neighborhood(graph, [u])
        shrink_branches.append(ShrinkBranch(u, kept))
    return DecompositionResult(
        independent, tuple(cycle_branches), tuple(shrink_branches), packing
    )


def _alternating_cycle_vertices(cycle: OddCycle) -> tuple[int, ...]:
    """floor(length/2) pairwise non-adjacent cycle vertices (even positions,
    dropping the last one, which would close the odd wrap-around)."""
    return cycle.vertices[0 : cycle.length - 1 : 2]


class _Engine:
    def __init__(self, graph: Graph, params: SolveParams) -> None:
        self.graph = graph
        self.params = params
        self.original_n = graph.n
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

    def _exact_or_greedy(self, graph: Graph, orig_ids: tuple[int, ...]) -> frozenset[int]:
        if two_coloring(graph).coloring is not None:
            local = max_weight_independent_set_bipartite(graph)
        else:
            local = greedy_independent_set(graph)
        return frozenset(orig_ids[v] for v in local)

    def _compute(self, graph: Graph, orig_ids: tuple[int, ...], k: int, seed: int) -> frozenset[int]:
        params = self.params
        n_here = graph.n
        if k == 0:
            return self._exact_or_greedy(graph, orig_ids)
        if n_here * params.p <= self.original_n * k:
            return frozenset()
        if two_coloring(graph).coloring is not None:
            # Exact; no branch can beat it, and the tie order prefers I.
            local = max_weight_independent_set_bipartite(graph)
            return frozenset(orig_ids[v] for v in local)
        r = params.sample_size(n_here, self.original_n)
        rng = random.Random(derive_seed(seed, "sample"))
        dec = decompose(graph, k, r, params.p, rng)
        best = frozenset(orig_ids[v] for v in dec.independent)
        for index, branch in enumerate(dec.cycle_branches):
            cycle_members = set(branch.cycle.vertices)
            inner = sorted(branch.vertices - cycle_members)
            sub, _, local_ids = induced_subgraph(graph, inner)
            child_ids = tuple(orig_ids[v] for v in local_ids)
            child = self.solve(sub, child_ids, k - 1, derive_seed(seed, "cycle", index))
            addition = frozenset(
                orig_ids[v] for v in _alternating_cycle_vertices(branch.cycle)
            )
            candidate = child | addition
            if len(candidate) > len(best):
                best = candidate
        for index, branch in enumerate(dec.shrink_branches):
            if not params.shrink_keeps(len(branch.vertices), n_here):
                continue
            sub, _, local_ids = induced_subgraph(graph, sorted(branch.vertices))
            child_ids = tuple(orig_ids[v] for v in local_ids)
            child = self.solve(sub, child_ids, k, derive_seed(seed, "shrink", index))
            if len(child) > len(best):
                best = child
        return best


def _solve_with_seed(graph: Graph, params: SolveParams, seed: int) -> frozenset[int]:
    if params.k == 0:
        if two_coloring(graph).coloring is not None:
            return max_weight_independent_set_bipartite(graph)
        return greedy_independent_set(graph)
    return _Engine(graph, params).run(seed)


def eptas_solve(graph: Graph, params: SolveParams, rng: random.Random | None = None) -> frozenset[int]:
    """One seeded engine run; see the module docstring for the guarantee.

    The run is driven by params.seed unless an explicit rng is supplied, in
    which case one 64-bit seed is drawn from it.
    """
    seed = params.seed if rng is None else rng.getrandbits(64)
    return _solve_with_seed(graph, params, seed)


def amplify_runs(graph: Graph, params: SolveParams) -> list[frozenset[int]]:
    """All repetition results, in order, under derived per-repetition seeds."""
    return [
        _solve_with_seed(graph, params, derive_seed(params.seed, "rep", i))
        for i in range(params.repetitions)
    ]


def amplify(graph: Graph, params: SolveParams) -> frozenset[int]:
    """Largest result over params.repetitions runs (first run wins ties)."""
    best: frozenset[int] | None = None
    for result in amplify_runs(graph, params):
        if best is None or len(result) > len(best):
            best = result
    assert best is not None
    return best
